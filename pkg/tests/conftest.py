import textwrap

import pytest

from unitcheck import EncodingConfig, check_source

LISTING_F = textwrap.dedent("""\
    dim length; dim mass; dim time;
    unit m = base(length, 1.0);
    unit g = base(mass, 1e-3);
    unit s = base(time, 1.0);
    let height : m       = 1*m;
    let g0     : m/s^2   = 9.81*m/s^2;
    let t      : s       = sqrt(2*height/g0);
    print t in s;
    """)

# base units plus the derived units and constants used throughout the tests
DERIVED = textwrap.dedent("""\
    dim length; dim mass; dim time;
    unit m = base(length, 1.0);
    unit g = base(mass, 1e-3);
    unit s = base(time, 1.0);
    unit cm = m/100;
    unit kg = 1000*g;
    unit J = kg*m*m/s/s;
    const c = 2.99792458e8 * m / s;
    """)

CFG3 = EncodingConfig(axis_count=3)
CFG3_COMPAT = EncodingConfig(axis_count=3, strict=False)


@pytest.fixture
def listing_f():
    return LISTING_F


@pytest.fixture
def checked():
    def run(source, **kw):
        return check_source(source, "test.udl", **kw)
    return run


@pytest.fixture
def udl_file(tmp_path):
    def write(source, name="prog.udl"):
        path = tmp_path / name
        path.write_text(source)
        return str(path)
    return write
