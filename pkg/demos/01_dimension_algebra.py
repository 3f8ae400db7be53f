"""
Dimensions as integers
======================

A dimension is a vector of integer exponents, one per axis. Packing turns the
vector into a single integer whose digits (in a balanced radix) are those
exponents, so multiplying quantities becomes adding their codes.
"""

# %%
# Vectors first. With axes (length, mass, time), velocity is length/time.
from unitcheck import (
    CapacityOverflow,
    DimVector,
    EncodingConfig,
    NonIntegerExponent,
    PackedDim,
    dv_pow,
    p_add,
    p_scale,
    pack,
    unpack,
)

cfg = EncodingConfig(axis_count=3)
length, mass, time = (DimVector.axis(i, 3) for i in range(3))
velocity = length / time
print("velocity", velocity.exponents)

# %%
# Packing uses place values 1, 10, 100. Each digit lives in [-4, 5], so the
# code of velocity is 1*1 + (-1)*100 = -99.
print("digit range", cfg.digit_range)
code = pack(velocity, cfg)
print("packed velocity", code.code, "->", unpack(code, cfg).exponents)

# %%
# Adding codes is multiplying dimensions, as long as every digit stays in range.
energy = p_add(pack(mass, cfg), p_scale(code, 2, 1, cfg), cfg)
print("energy", energy.code, unpack(energy, cfg).exponents)

# %%
# Strict mode refuses anything the code cannot represent faithfully.
try:
    pack(DimVector((10, 0, 0)), cfg)
except CapacityOverflow as exc:
    print("strict:", exc)
try:
    dv_pow(length, 1, 2, cfg)
except NonIntegerExponent as exc:
    print("strict:", exc)

# %%
# Compat mode does plain integer arithmetic instead. The price is aliasing:
# length^10 carries into the mass digit and looks exactly like mass.
compat = EncodingConfig(axis_count=3, strict=False)
print("compat cm^10 code", pack(DimVector((10, 0, 0)), compat).code,
      "== mass code", pack(mass, compat).code)
print("compat sqrt of length truncates to", p_scale(PackedDim(1), 1, 2, compat).code)
