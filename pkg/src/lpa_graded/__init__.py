"""
lpa-graded: graded structure of Leavitt path algebras of finite graphs.

Decides the graded Naimark property, computes graded socle decompositions
and the socular chain, and verifies the claimed isomorphisms with an exact
arithmetic engine for L_K(E).
"""

__version__ = "0.1.0"
