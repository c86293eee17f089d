"""Exact (p,q,t)-Catalan continued fractions, pattern-class enumerators,
path-diagram bijections and gamma expansions."""
from .contfrac import (CF, JFraction, SFraction, contract, jfraction_series, named_cf,
                       sfraction_series)
from .gamma import (GammaExpansion, gamma_decompose, gamma_via_perms, mfs_orbit,
                    phi_prime_S, phi_prime_x)
from .kernels import BACKEND
from .pathdiag import (LaguerreHistory, PathDiagram, path_sum, phi1, phi1_inv, phi2,
                       phi2_inv, phi3, phi3_inv, phi_fv, phi_fv_inv, psi_fv, psi_fv_inv)
from .patternclass import (PatternClass, class_polynomial, generate_class,
                           insertion_decode, insertion_encode)
from .permstats import Boundary, as_perm, des, local_stats, vincular2, vincular3
from .polyring import MPoly, Series
from .verify import VerifyReport, table, verify

__version__ = "0.1.0"
