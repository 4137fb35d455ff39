from .decorators import scipy_only, slow
