from enum import Enum


class SupportMode(str, Enum):
    MAX = "max"
    MIN = "min"
