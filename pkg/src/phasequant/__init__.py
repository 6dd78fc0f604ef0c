"""phasequant: an exact symbolic + numeric quantization workbench.

Symbolic layers (Gaussian-rational coefficients, formal hbar) cover canonical
commutation algebra, Weyl/Wigner maps, the Moyal star product and its
obstruction, prequantization operators, and truncated Fock-space matrices;
the numeric layer covers Wigner functions, spin quasi-probabilities, a sphere
residue integral, winding-number loop integrals, and zeta partial sums.
"""

__version__ = "0.1.0"
