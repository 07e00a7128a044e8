"""Write the natural-order counterexample to the signed flag-major product.

    python scripts/record_order_remark.py [--n-max 4] [--out tests/golden/order_remark_witness.txt]
"""

import argparse
from pathlib import Path

from signed_mahonian.genfun import order_remark_witness


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=4)
    ap.add_argument("--out", type=Path,
                    default=Path(__file__).resolve().parents[1] / "tests/golden/order_remark_witness.txt")
    args = ap.parse_args()

    found = order_remark_witness(args.n_max)
    if found is None:
        raise SystemExit(f"no witness for n <= {args.n_max}")
    n, natural, closed = found
    text = f"n={n}\nnatural: {natural}\nclosed: {closed}\n"
    args.out.write_text(text)
    print(text, end="")


if __name__ == "__main__":
    main()
