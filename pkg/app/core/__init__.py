"""
core/
-----
Numerical and runtime foundations shared by every other package.

    quaternion   Hamilton algebra, scalar and vectorised
    linalg       Gauss-Jordan inversion, real and quaternion
    errors       exception hierarchy
    config       environment settings (QMEM_*)
    logger       structured JSON events on stderr
"""
