"""Problem file encoding"""

from .matrix_codec import decode_matrix, decode_vector, encode_matrix, encode_vector
from .problem_file import problem_from_dict, problem_to_dict, load_problem, save_problem

__all__ = [
    "decode_matrix",
    "decode_vector",
    "encode_matrix",
    "encode_vector",
    "problem_from_dict",
    "problem_to_dict",
    "load_problem",
    "save_problem",
]
