"""Sign patterns of Fiedler vectors and the graphs where spectral bisection is lopsided."""

from .graphcore import Graph
from .join_theory import decide_i01, kjoin_recognize, m_lk
from .sign_oracle import min_imbalance
from .spectra import algebraic_connectivity

__all__ = ["Graph", "algebraic_connectivity", "decide_i01", "kjoin_recognize", "m_lk", "min_imbalance"]
