use std::ffi::CString;

use pyo3::prelude::*;
use pyo3::types::PyDict;

/// Runs `code` with the module importable as `blade_py`.
fn run_python(code: &str) {
    Python::initialize();
    Python::attach(|py| {
        let module = PyModule::new(py, "blade_py").unwrap();
        blade_py::blade_py(&module).unwrap();
        py.import("sys")
            .unwrap()
            .getattr("modules")
            .unwrap()
            .set_item("blade_py", &module)
            .unwrap();
        let globals = PyDict::new(py);
        let code = CString::new(code).unwrap();
        if let Err(e) = py.run(&code, Some(&globals), None) {
            e.print(py);
            panic!("python snippet failed");
        }
    });
}

#[test]
fn worked_example_through_bindings() {
    run_python(
        r#"
import blade_py as b
assert str(b.evaluate("e[1,2]*e3*e1*e2", b.Signature([1, 1, 1]))) == "-e[3]"
assert str(b.evaluate("e[1,2]*e3*e1*e2", b.Signature([2, 3, 1]))) == "-6*e[3]"
"#,
    );
}

#[test]
fn multivector_operators_and_products() {
    run_python(
        r#"
import blade_py as b
s = b.Signature([1, -1, 0])
e1 = b.Multivector.blade(s, [1])
e2 = b.Multivector.blade(s, [2])
e3 = b.Multivector.blade(s, [3])
assert str(e1 * e1) == "1" and str(e2 * e2) == "-1" and (e3 * e3).is_zero()
assert e1 * e2 == -(e2 * e1)
assert e1 ^ e2 == e1 * e2
assert (e1 ^ e1).is_zero()
assert str(e1.lc(e1 * e2)) == "e[2]"
assert str(e2.rc(e2)) == "-1"
x = b.Multivector.scalar(s, "1/2") + e1 - (e1 ^ e2)
assert x.terms() == [([], "1/2"), ([1], "1"), ([1, 2], "-1")]
assert x.reverse() == b.Multivector.scalar(s, "1/2") + e1 + (e1 ^ e2)
assert x.involute() == b.Multivector.scalar(s, "1/2") - e1 - (e1 ^ e2)
assert x.even() + x.odd() == x
assert x.grade(1) == e1 and x.grade(-1).is_zero()
assert x.coefficient([1, 2]) == "-1" and x.scalar_part() == "1/2"
assert x.grades() == [0, 1, 2]
assert x.signature.dim == 3
assert s.squares() == ["1", "-1", "0"]
assert len(s.blades()) == 8
"#,
    );
}

#[test]
fn helpers_match_core() {
    run_python(
        r#"
import blade_py as b
s = b.Signature.pqr(2, 1, 1)
assert b.alpha([2], [1]) == -1 and b.alpha([1], [2]) == 1
assert b.symdiff([1, 2], [2, 3]) == [1, 3]
assert b.sigma([3], [3], s) == "-1"
assert b.rewrite_word([2, 1, 2], s) == b.evaluate("e2*e1*e2", s)
v = lambda *c: b.Multivector.vector(s, list(c))
assert b.is_independent([v(1, 0, 0, 0), v(0, 1, 0, 0)])
assert not b.is_independent([v(1, 2, 0, 0), v("-1/2", -1, 0, 0)])
assert b.rank([[1, 2], [2, 4]]) == 1
p, d = b.orthogonalize([[0, 1], [1, 0]])
assert d == ["2", "-1/2"], d
"#,
    );
}

#[test]
fn errors_become_value_errors() {
    run_python(
        r#"
import blade_py as b
s = b.Signature([1, 1])
for bad in [lambda: b.Multivector.blade(s, [2, 1]),
            lambda: b.Multivector.blade(s, [3]),
            lambda: b.evaluate("e1 +", s),
            lambda: b.Multivector.blade(s, [1]) + b.Multivector.blade(b.Signature([1]), [1]),
            lambda: b.orthogonalize([[1, 2], [3, 4]]),
            lambda: b.Signature(["x"])]:
    try:
        bad()
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")
"#,
    );
}
