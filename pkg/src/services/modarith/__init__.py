"""
Modular arithmetic and Bernoulli numbers mod p
"""

from .arithmetic import matrix_rank_mod_p, mod_inv, mod_pow, require_odd_prime
from .bernoulli import bernoulli_recurrence, bernoulli_worpitzky
from .cache import cache_path, cache_read, cache_write, load_or_compute
from .models import PrimeContext

__all__ = [
    "PrimeContext",
    "bernoulli_recurrence",
    "bernoulli_worpitzky",
    "cache_path",
    "cache_read",
    "cache_write",
    "load_or_compute",
    "matrix_rank_mod_p",
    "mod_inv",
    "mod_pow",
    "require_odd_prime",
]
