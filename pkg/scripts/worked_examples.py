"""Print the worked examples: factorizations over F_2, the (3,5,9)
constituent table, the [16,2,10] Cordaro-Wagner code, the length-8 trace
pattern, and the F_3 case where unweighted duality goes wrong."""

from __future__ import annotations

from gqcodes.cyclic import residue_field
from gqcodes.duality import dual_gqc, is_lcd
from gqcodes.gf import prime_field
from gqcodes.gqc import GqcCode, decompose
from gqcodes.polyring import factor_xm_minus_1, format_poly

F2, F3 = prime_field(2), prime_field(3)


def main() -> None:
    for m in (3, 5, 9):
        fs = " * ".join(f"({format_poly(f.coeffs)})" for f in factor_xm_minus_1(2, m).factors)
        print(f"x^{m} - 1 = {fs}")

    S = decompose(GqcCode(F2, (3, 5, 9), [([1, 1], [1, 0, 1], [1, 1, 0, 1])]))
    print("\nblocks (3,5,9) over F_2:")
    for f, mask in zip(S.factors, S.masks):
        print(f"  {format_poly(f.coeffs):<26} E = F_{residue_field(f).order:<3} support {''.join('x' if b else '.' for b in mask)}")

    cw = GqcCode(F2, (6, 5, 5), [([1] * 6, [0], [1] * 5), ([0], [1] * 5, [1] * 5)])
    L = cw.linear
    print(f"\nCordaro-Wagner: [{L.n},{L.k},{L.min_distance()}], LCD={is_lcd(cw).holds}")

    C = GqcCode(F3, (1, 5), [([1], [1, 1, 1, 1, 1])])
    print("\nall-ones code over F_3 with blocks (1,5):")
    print(f"  direct LCD verdict:             {is_lcd(C, method='direct').holds}")
    print(f"  weighted constituent verdict:   {is_lcd(C, method='constituent').holds}")
    print(f"  unweighted constituent verdict: {is_lcd(C, method='constituent', weighted=False).holds}")
    print(f"  unweighted dual is correct:     {dual_gqc(C, weighted=False) == dual_gqc(C, method='direct')}")


if __name__ == "__main__":
    main()
