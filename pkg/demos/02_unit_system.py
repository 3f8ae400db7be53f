"""
Building a unit system
======================

A :class:`~unitcheck.UnitSystem` is immutable: every definition returns a new
system. Derived units are written as expressions over existing ones and
folded to a dimension plus a scale factor relative to the base units.
"""

# %%
from unitcheck import UnitSystem

system = UnitSystem()
for axis in ("length", "mass", "time"):
    system = system.define_axis(axis)
system = (system
          .define_base_unit("m", "length", 1.0)
          .define_base_unit("g", "mass", 1e-3)
          .define_base_unit("s", "time", 1.0))

# %%
# Derived units take any expression. Factors multiply through.
system = (system
          .define_derived_unit("cm", "m/100")
          .define_derived_unit("kg", "1000*g")
          .define_derived_unit("J", "kg*m*m/s/s")
          .define_constant("c", "2.99792458e8 * m / s"))

# Units store exponent vectors; ``quantity`` gives them in the system's own
# (packed) encoding.
for symbol, unit in system.units.items():
    code = system.quantity(symbol).dim.code
    print(f"{symbol:3} {system.format_dim(unit.dim):16} factor={unit.factor!r} code={code}")

# %%
# Constants are quantities, so they can be used in arithmetic right away.
c = system.constants["c"]
print("c =", c.value, system.format_dim(c.dim))

# %%
# Systems are values: the one above is untouched by this extension.
bigger = system.define_derived_unit("km", "1000*m")
print("km" in bigger.units, "km" in system.units)
