"""weightlab: exact computations around admissible weight modules of current algebras."""

__version__ = "0.1.0"
