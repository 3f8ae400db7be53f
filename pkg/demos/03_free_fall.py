"""
Checking and running a program
==============================

The UDL text format declares dimensions and units, binds annotated values and
prints them in a chosen unit. Checking happens before anything runs.
"""

# %%
from pathlib import Path

from unitcheck import check_source, eval_checked, format_output

here = Path(__file__).parent
source = (here / "free_fall.udl").read_text()
program = check_source(source, "free_fall.udl")
print("diagnostics:", program.diagnostics)

# %%
# The checked evaluator carries a dimension next to every number.
for record in eval_checked(program):
    print(format_output(record))

# %%
# A program with errors is reported statement by statement; nothing runs.
broken = check_source((here / "broken.udl").read_text(), "broken.udl")
for diagnostic in broken.diagnostics:
    print(diagnostic)

# %%
# Derived units and constants work the same way.
derived = check_source((here / "derived_units.udl").read_text(), "derived_units.udl")
for record in eval_checked(derived):
    print(format_output(record))
