"""
Paying for checks only once
===========================

Once a program has been checked, its dimensions are known statically. The
fast evaluator compiles it to closures over bare floats: same output, no
dimension bookkeeping at run time.
"""

# %%
from pathlib import Path

from unitcheck import bench, check_source, eval_checked, eval_fast, format_output, watch_dim_ops

program = check_source((Path(__file__).parent / "free_fall.udl").read_text())

with watch_dim_ops() as checked_ops:
    checked = [format_output(r) for r in eval_checked(program)]
with watch_dim_ops() as fast_ops:
    fast = [format_output(r) for r in eval_fast(program)]

print("checked:", checked, "dimension ops:", checked_ops.dim_ops)
print("fast:   ", fast, "dimension ops:", fast_ops.dim_ops)
assert checked == fast

# %%
# The same comparison over many iterations.
for line in bench(program, iterations=2000).lines():
    print(line)
