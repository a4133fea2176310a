#!/usr/bin/env python3
"""Print closed-form vs numeric signless Laplacian spectra side by side
for every covered cyclic/dihedral order shape.

Usage: python scripts/spectra_tables.py
"""

from thetagraph import build_Q, build_theta, closed_form_spectrum, cyclic, dihedral, eig_sym, spectra_equal

FAMILIES = {
    "cyclic": (6, 10, 14, 15, 21, 33, 35, 4, 8, 16, 32, 9, 27, 25, 49, 7, 13),
    "dihedral": (6, 10, 15, 21, 4, 8, 9, 27, 25, 5, 11),
}


def main() -> None:
    for family, orders in FAMILIES.items():
        ctor = cyclic if family == "cyclic" else dihedral
        for n in sorted(orders):
            t = build_theta(ctor(n))
            closed = closed_form_spectrum(family, n)
            numeric = eig_sym(build_Q(t))
            match = spectra_equal(closed, numeric, 1e-7)
            print(f"{family}({n}) |G|={t.n_vertices}  match={'yes' if match else 'NO'}")
            for display, value, mult in closed.display_items():
                print(f"    {display:<22} x{mult:<4} ({value:.10f})")
    print("done.")


if __name__ == "__main__":
    main()
