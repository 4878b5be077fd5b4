from setuptools import find_packages, setup

setup(
    name="posiflow",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    version="0.1.0",
    description="Optimal control of positive linear systems with coupled input constraints: value iteration, sparse feedback, LP certificates and distributed simulation.",
    long_description=open("README.md", "r", encoding="utf-8").read(),
    long_description_content_type="text/markdown",
    keywords=["optimal control", "positive systems", "value iteration", "linear programming"],
    classifiers=[],
    license="MIT",
    entry_points={
        "console_scripts": ["posiflow=cli.main:run_console"]
    },
    python_requires=">=3.9",
    install_requires=[
        "pydantic>=2.0",
        "fire>=0.3.0",
        "python-dotenv>=1.0.0",
        "orjson>=3.9.0",
        "rich>=13.4.1",
        "numpy>=1.24",
        "scipy>=1.11",
        "networkx>=3.1",
    ],
    extras_require={
        "test": ["pytest>=7.0.0", "pytest-cov>=4.0.0", "hypothesis>=6.80"],
    },
)
