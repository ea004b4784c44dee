"""Tour of the generators: seeds, composable moves, and the vertex budget.

Run:  python3 demos/building_spheres.py
"""

import argparse

from spheremap import (
    boundary_simplex,
    construct,
    cyclic_circle,
    degree,
    degree_four_witness,
    insertion_step,
    one_point_suspension,
    vertex_bound,
)


def show(tag, cert):
    ls = cert.labeled
    print(f"{tag}: dim {ls.dimension}, {cert.vertex_count} vertices, "
          f"{len(ls.complex.facets)} facets, degree {cert.claimed_degree}")


def main() -> None:
    argparse.ArgumentParser(description=__doc__).parse_args()

    print("-- seeds ------------------------------------------------------")
    show("boundary_simplex(2)", boundary_simplex(2))
    show("cyclic_circle(3)   ", cyclic_circle(3))
    print()

    print("-- one-point suspension: +1 vertex, +1 dimension, same degree --")
    cert = cyclic_circle(3)
    show("start   ", cert)
    for _ in range(2):
        cert = one_point_suspension(cert)
        show("suspended", cert)
    print()

    print("-- insertion step: +n+2 vertices, +n degree ---------------------")
    cert = boundary_simplex(2)
    show("start  ", cert)
    for _ in range(3):
        cert = insertion_step(cert)
        show("inserted", cert)
    print()

    print("-- ten-vertex degree-4 witness ----------------------------------")
    raw = degree_four_witness(raw=True)
    show("raw     ", raw)
    print(f"  raw per-target sums: {degree(raw.labeled).per_target_sums}")
    show("swapped ", degree_four_witness())
    print()

    print("-- construct(n, d) stays within ((n+2)/n)|d| + 2n+2 -------------")
    for n, d in [(2, 3), (2, 17), (4, 50), (6, 200), (3, -9)]:
        cert = construct(n, d)
        bound = vertex_bound(n, d)
        print(f"construct({n}, {d:4d}): {cert.vertex_count:3d} vertices "
              f"(bound {bound}), degree {cert.claimed_degree}")
    print()

    print("every certificate above re-verified its degree at build time")


if __name__ == "__main__":
    main()
