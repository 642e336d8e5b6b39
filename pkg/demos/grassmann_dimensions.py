"""Count the Z3-graded Grassmann algebra with N generators of each kind."""

from ternalg import grassmann

for n in (1, 2, 3):
    sectors = grassmann.grade_sectors(n)
    print(f"N={n}: D={grassmann.total_dimension(n)} (formula {grassmann.d_formula(n)})")
    if n == 1:
        for name, words in sectors.items():
            print(f"  {name}: {words}")
