"""srcirc: exact unit-circle root location for self-reciprocal polynomials.

Library layout:

* exact      -- rationals, fraction-free determinants, Laurent polys, Sturm
* embedding  -- coefficient vectors and their symbol-vector embeddings
* criterion  -- determinant route: Delta_n, delta_n, verdicts
* recursion  -- inductive route: gamma chain without determinants
* canonical  -- step Hamiltonians, transfer-matrix solutions, reconstruction
* expoly     -- complex-numeric evaluation of E, A, B
* oracle     -- numeric root finder and the nested-determinant chain
* certify    -- symbolic certificates for the all-shifts criterion
* api, cli   -- service layer (FastAPI + pydantic) and its thin CLI client
"""

from .embedding import CoeffVector, LogScale, SymbolVector, embed_omega, embed_simple
from .criterion import (
    DeltaReport,
    Verdict,
    delta_omega,
    delta_simple,
    hb_check,
    verdict_on_circle_sampled,
    verdict_simple,
)
from .recursion import GammaChain, OmegaVector, RecursionBreakdown, omega0, omega0_omega, run_recursion
from .canonical import StepHamiltonian, eval_AB, hamiltonian, kernel_K, reconstruct_polynomial
from .oracle import RootReport, TakagiChain, classify_circle, find_roots, takagi_chain, verdict_oracle
from .certify import SignCertificate, certify_on_circle, symbolic_delta

__version__ = "0.1.0"
