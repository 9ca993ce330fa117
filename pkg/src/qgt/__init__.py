"""Exact symbolic computation in the quantized enveloping algebra U_q(gl_N),
its RTT presentation, the Gelfand-Tsetlin subalgebra, and the Galois-order
realization, together with a verification CLI."""

from qgt.scalar import QScalar

__all__ = ["QScalar"]
