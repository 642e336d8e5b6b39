"""Constant and braid Yang-Baxter checks on a few 4x4 R-matrices."""

from ternalg.triple_systems import RMatrix, flip, yb_check_braid, yb_check_constant

P = flip(2)
candidates = {
    "identity": RMatrix.identity(2),
    "flip": P,
    "perturbed": RMatrix.from_function(
        2, lambda a, b, c, d: int((a, b) == (c, d)) + int((a, b, c, d) == (0, 0, 0, 1))),
}
for name, R in candidates.items():
    print(f"{name:10s} constant={yb_check_constant(R)} braid(P R)={yb_check_braid(P @ R)}")
