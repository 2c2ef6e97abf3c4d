"""Write SVG/JSON/DOT renderings of small partitions to an output directory.

    t4_pair.svg        both partitions of T_4 (S_2 = A_1, then S_2 = A_2)
    t6_iso_k{1,2,3}    the isomorphic partitions of T_6
    t6_mixed.svg       a partition of T_6 into non-isomorphic plane trees
"""
import argparse
from pathlib import Path

from twisted_trees.enumeration import filter_isomorphic, oracle_enumerate
from twisted_trees.export import dumps, to_dot, to_svg
from twisted_trees.isomorphic import iso_partition


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="figures")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    pair = [iso_partition(2, 1), iso_partition(2, 2)]
    (out / "t4_pair.svg").write_text(to_svg(pair, titles=["S_2 = A_1", "S_2 = A_2"]))
    (out / "t4_pair.json").write_text(dumps(pair, indent=2) + "\n")

    for k in (1, 2, 3):
        p = iso_partition(3, k)
        (out / f"t6_iso_k{k}.svg").write_text(to_svg(p, titles=[f"T_6, S_3 = A_{k}"]))
        (out / f"t6_iso_k{k}.dot").write_text(to_dot(p, f"t6_iso_k{k}"))

    all6 = oracle_enumerate(3)
    iso = set(filter_isomorphic(all6))
    mixed = next(p for p in all6 if p not in iso)
    (out / "t6_mixed.svg").write_text(to_svg(mixed, titles=["T_6, non-isomorphic trees"]))
    print(f"wrote {len(list(out.iterdir()))} files to {out}/")


if __name__ == "__main__":
    main()
