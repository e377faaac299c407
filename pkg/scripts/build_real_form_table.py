"""Regenerate the static real-form label table shipped with the package.

The table is a function of closed-form dimension formulas only, so this
script is deterministic; rerun it after widening the rank range.
"""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from quasisplit.catalog import generate_real_form_table


def main() -> None:
    table = generate_real_form_table(max_rank=8)
    out = pathlib.Path(__file__).resolve().parents[1] / "src" / "quasisplit" / "data"
    out.mkdir(parents=True, exist_ok=True)
    path = out / "real_forms.json"
    path.write_text(json.dumps(table, indent=2, sort_keys=True) + "\n")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
