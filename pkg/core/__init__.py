"""Solvers for positive linear systems with coupled input constraints"""
