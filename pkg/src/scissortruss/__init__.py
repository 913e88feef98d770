"""Design and analysis toolkit for triple-scissor deployable truss antennas.

Subpackages cover parametric geometry synthesis, planar deployment
kinematics, energy-method dynamics, material selection for low-orbit
thermal environments, and hybrid global/local optimization of surrogate
networks and ring geometry.  Bundled reference datasets support
comparisons against published design tables and simulation responses.
"""

from scissortruss import (  # noqa: F401
    dynamics,
    geometry,
    kinematics,
    materials,
    optimize,
    refdata,
)

__version__ = "0.1.0"
