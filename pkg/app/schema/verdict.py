from enum import Enum


class Verdict(str, Enum):
    independent = "independent"
    dependent = "dependent"


class Rationality(str, Enum):
    rational = "rational"
    irrational = "irrational"
