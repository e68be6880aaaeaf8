# Second-kind polynomials: Rodrigues construction vs the closed triple sum.
import json

from bicalc import hermite_second_rodrigues, format_expr, second_kind_discrepancies

print("H_0001 =", format_expr(hermite_second_rodrigues(0, 0, 0, 1)))
print("H_1000 =", format_expr(hermite_second_rodrigues(1, 0, 0, 0)))
print("H_0011 =", format_expr(hermite_second_rodrigues(0, 0, 1, 1)))

report = second_kind_discrepancies(2)
defined = [r for r in report if not isinstance(r["closed_form"], dict)]
print(f"{len(report)} orders, closed form defined at {len(defined)}, "
      f"agreeing at {sum(r['equal'] for r in report)}")
for r in defined:
    print(json.dumps(r))
