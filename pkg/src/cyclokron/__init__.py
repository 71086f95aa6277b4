"""Exact checks of the circulant-determinant congruence mod p, Kronecker's
divisibility lemma over Z[zeta_p], and irreducibility of Phi_p."""

from .circulant import (
    CirculantVector,
    cyclic_convolve,
    det_bareiss,
    det_leibniz,
    det_multimodular,
    det_powersum_mod_p,
)
from .cyclotomic import (
    CyclotomicInt,
    circulant_zeta_identity,
    eisenstein_shift_check,
    irreducibility_report,
    kronecker_factor,
    kronecker_lemma_check,
    phi,
    rational_relation_check,
    vanishes_at_zeta,
)
from .orbits import Permutation, SymbolicDet, leibniz_symbolic, orbit_decompose, sign, t_action, verify_claim
from .ring import (
    NEG_INF,
    IntPoly,
    ModInt,
    PrimeModulus,
    content_and_primitive,
    crt_combine,
    is_prime,
    poly_divmod,
    poly_mul,
)

__version__ = "0.1.0"
