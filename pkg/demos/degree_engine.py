"""How the degree of a coloring is computed and which laws it obeys.

Run:  python3 demos/degree_engine.py
"""

import argparse

from spheremap import (
    build_complex,
    cyclic_circle,
    degree,
    degree_four_witness,
    facet_sign,
    labeled_sphere,
    link_reduction,
    one_point_suspension,
    orient,
    permutation_sign,
    relabel,
    reverse_orientation,
    singleton_colors,
)


def main() -> None:
    argparse.ArgumentParser(description=__doc__).parse_args()

    print("-- facet signs on the boundary tetrahedron ----------------------")
    tetra = build_complex([(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])
    ls = labeled_sphere(orient(tetra), {v: v for v in range(1, 5)})
    for f in tetra.facets:
        s, target = facet_sign(ls, f)
        print(f"facet {f}: sign {s:+d}, maps onto the target omitting color {target}")
    rep = degree(ls)
    print(f"all {ls.color_count} per-target sums: {rep.per_target_sums} "
          f"-> degree {rep.degree}")
    print()

    print("-- a degenerate facet contributes nothing -----------------------")
    hexagon = build_complex([(i, i % 6 + 1) for i in range(1, 7)])
    collapsed = labeled_sphere(orient(hexagon), {1: 1, 2: 1, 3: 2, 4: 3, 5: 2, 6: 3})
    print(f"edge (1,2) with both ends colored 1: sign {facet_sign(collapsed, (1, 2))}")
    print(f"degree of that coloring: {degree(collapsed).degree}")
    print()

    print("-- sign laws -----------------------------------------------------")
    witness = degree_four_witness(raw=True).labeled
    print(f"raw witness degree: {degree(witness).degree}")
    swap = {1: 2, 2: 1, 3: 3, 4: 4, 5: 5}
    print(f"after swapping colors 1 and 2 (sign {permutation_sign(swap)}): "
          f"{degree(relabel(witness, swap)).degree}")
    print(f"after reversing the orientation: "
          f"{degree(reverse_orientation(witness)).degree}")
    print()

    print("-- cutting out a singleton color ---------------------------------")
    cert = one_point_suspension(cyclic_circle(3))
    ls = cert.labeled
    apex = max(ls.oriented.vertices)
    print(f"suspended circle: dim {ls.dimension}, degree {cert.claimed_degree}, "
          f"singleton colors {singleton_colors(ls)}")
    red = link_reduction(ls, apex)
    print(f"link reduction at the apex {apex}: dim {red.dimension}, "
          f"degree {degree(red).degree} (the original circle, exactly)")


if __name__ == "__main__":
    main()
