from enum import Enum


class SamplerMode(str, Enum):
    """How a DirectionSampler spreads its unit directions."""
    FULL_SPHERE = "full_sphere"
    HALF_SPHERE_FIRST_COORD_NONNEG = "half_sphere"
    UNIFORM_ANGLES_2D = "uniform_angles_2d"
