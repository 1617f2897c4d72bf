//! Python bindings. Elements are passed as indices or labels and returned as
//! indices.

use std::collections::BTreeMap;

use greenbox::{
    drazin_inverse, green_relations, group_inverse, inverse_along, moore_penrose, parse_semigroup,
    render_eggbox, run_checks, sweep_orders, CheckId, ClosureLimits, ElementId, Error,
    GreenStructure, Semigroup, Semiring, SmallMatrix, StarSemigroup, Transformation,
    VerificationReport,
};
use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::UnknownElement(_) => PyKeyError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

#[derive(FromPyObject)]
enum Elem {
    Index(usize),
    Label(String),
}

fn ids(xs: &[ElementId]) -> Vec<usize> {
    xs.iter().map(|x| x.index()).collect()
}

fn parse_checks(names: Option<Vec<String>>) -> PyResult<Vec<CheckId>> {
    match names {
        None => Ok(CheckId::ALL.to_vec()),
        Some(names) => names
            .iter()
            .map(|n| {
                CheckId::parse(n).ok_or_else(|| PyKeyError::new_err(format!("unknown check `{n}`")))
            })
            .collect(),
    }
}

/// Result of a verification run.
#[pyclass(name = "Report", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyReport {
    inner: VerificationReport,
}

#[pymethods]
impl PyReport {
    #[getter]
    fn passed(&self) -> bool {
        self.inner.passed()
    }

    #[getter]
    fn failures(&self) -> u64 {
        self.inner.total_failures()
    }

    #[getter]
    fn semigroups(&self) -> u64 {
        self.inner.semigroups
    }

    #[getter]
    fn involutions(&self) -> u64 {
        self.inner.involutions
    }

    /// `{order: count}` for sweeps.
    #[getter]
    fn orders(&self) -> BTreeMap<usize, u64> {
        self.inner.orders.clone()
    }

    /// `{check id: (instances, failures)}`.
    fn checks(&self) -> BTreeMap<String, (u64, u64)> {
        self.inner
            .outcomes
            .iter()
            .map(|(id, o)| (id.to_string(), (o.instances, o.failures)))
            .collect()
    }

    fn render(&self) -> String {
        self.inner.render()
    }

    fn __repr__(&self) -> String {
        format!(
            "Report(semigroups={}, involutions={}, failures={})",
            self.inner.semigroups,
            self.inner.involutions,
            self.inner.total_failures()
        )
    }
}

/// Witnesses of an inverse along `d`.
#[pyclass(name = "InverseAlong", frozen, get_all, skip_from_py_object)]
#[derive(Clone)]
struct PyInverseAlong {
    b: usize,
    inner: bool,
    e: usize,
    f: usize,
    group_witness: usize,
}

#[pymethods]
impl PyInverseAlong {
    fn __repr__(&self) -> String {
        format!(
            "InverseAlong(b={}, inner={}, e={}, f={}, group_witness={})",
            self.b,
            if self.inner { "True" } else { "False" },
            self.e,
            self.f,
            self.group_witness
        )
    }
}

/// A finite semigroup, optionally with an involution.
#[pyclass(name = "Semigroup", frozen, skip_from_py_object)]
struct PySemigroup {
    s: Semigroup,
    g: GreenStructure,
    star: Option<StarSemigroup>,
}

impl PySemigroup {
    fn wrap(s: Semigroup, star: Option<StarSemigroup>) -> Self {
        PySemigroup {
            g: green_relations(&s),
            s,
            star,
        }
    }

    fn el(&self, x: Elem) -> PyResult<ElementId> {
        match x {
            Elem::Index(i) if i < self.s.size() => Ok(ElementId::from(i)),
            Elem::Index(i) => Err(PyKeyError::new_err(format!(
                "element index {i} out of range"
            ))),
            Elem::Label(l) => self.s.resolve(&l).map_err(to_py),
        }
    }

    fn need_star(&self) -> PyResult<&StarSemigroup> {
        self.star
            .as_ref()
            .ok_or_else(|| PyValueError::new_err("semigroup has no involution"))
    }
}

#[pymethods]
impl PySemigroup {
    /// Build from Cayley table rows of 0-based indices.
    #[staticmethod]
    fn from_table(rows: Vec<Vec<usize>>) -> PyResult<Self> {
        let s = Semigroup::from_cayley_table(rows.len(), &rows).map_err(to_py)?;
        Ok(Self::wrap(s, None))
    }

    /// Close 1-based image lists under composition (left to right).
    #[staticmethod]
    fn from_transformations(degree: usize, generators: Vec<Vec<usize>>) -> PyResult<Self> {
        let gens = generators
            .iter()
            .map(|g| Transformation::from_images(g))
            .collect::<greenbox::Result<Vec<_>>>()
            .map_err(to_py)?;
        let s = Semigroup::from_transformation_generators(degree, &gens, ClosureLimits::default())
            .map_err(to_py)?;
        Ok(Self::wrap(s, None))
    }

    /// Close square matrices over `"nat"` or `"bool"`.
    #[staticmethod]
    #[pyo3(signature = (generators, semiring = "nat", transpose = false))]
    fn from_matrices(
        generators: Vec<Vec<Vec<u64>>>,
        semiring: &str,
        transpose: bool,
    ) -> PyResult<Self> {
        let ring = Semiring::from_name(semiring)
            .ok_or_else(|| PyValueError::new_err(format!("unknown semiring `{semiring}`")))?;
        let gens = generators
            .into_iter()
            .map(|m| SmallMatrix::new(ring, m))
            .collect::<greenbox::Result<Vec<_>>>()
            .map_err(to_py)?;
        let s = Semigroup::from_matrix_generators(&gens, ring, ClosureLimits::default())
            .map_err(to_py)?;
        let star = if transpose {
            Some(StarSemigroup::with_transpose(s.clone()).map_err(to_py)?)
        } else {
            None
        };
        Ok(Self::wrap(s, star))
    }

    /// Parse the text file format, including any involution section.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let file = parse_semigroup(text).map_err(to_py)?;
        let star = file.star().map_err(to_py)?;
        Ok(Self::wrap(file.semigroup, star))
    }

    /// A copy carrying the involution `star[i]`.
    fn with_involution(&self, star: Vec<usize>) -> PyResult<Self> {
        let map = star.into_iter().map(ElementId::from).collect();
        let st = StarSemigroup::new(self.s.clone(), map).map_err(to_py)?;
        Ok(Self::wrap(self.s.clone(), Some(st)))
    }

    #[getter]
    fn has_involution(&self) -> bool {
        self.star.is_some()
    }

    fn __len__(&self) -> usize {
        self.s.size()
    }

    fn size(&self) -> usize {
        self.s.size()
    }

    fn label(&self, a: Elem) -> PyResult<String> {
        Ok(self.s.label(self.el(a)?).to_owned())
    }

    fn labels(&self) -> Vec<String> {
        self.s.labels().to_vec()
    }

    fn index(&self, label: &str) -> PyResult<usize> {
        self.s.resolve(label).map(ElementId::index).map_err(to_py)
    }

    fn mul(&self, a: Elem, b: Elem) -> PyResult<usize> {
        Ok(self.s.mul(self.el(a)?, self.el(b)?).index())
    }

    fn table(&self) -> Vec<Vec<usize>> {
        self.s.table_rows()
    }

    fn idempotents(&self) -> Vec<usize> {
        ids(&self.s.idempotents())
    }

    fn star(&self, a: Elem) -> PyResult<usize> {
        let a = self.el(a)?;
        Ok(self.need_star()?.star(a).index())
    }

    /// Class index of every element under `"L"`, `"R"`, `"H"` or `"D"`.
    fn classes(&self, relation: &str) -> PyResult<Vec<usize>> {
        let v = match relation {
            "L" => self.g.l_classes(),
            "R" => self.g.r_classes(),
            "H" => self.g.h_classes(),
            "D" => self.g.d_classes(),
            _ => {
                return Err(PyValueError::new_err(format!(
                    "unknown relation `{relation}`"
                )))
            }
        };
        Ok(v.to_vec())
    }

    fn h_class(&self, a: Elem) -> PyResult<Vec<usize>> {
        Ok(ids(self.g.h_class_of(self.el(a)?)))
    }

    fn eggbox(&self) -> String {
        render_eggbox(&self.s, &self.g)
    }

    fn inverse_along(&self, a: Elem, d: Elem) -> PyResult<Option<PyInverseAlong>> {
        let r = inverse_along(&self.s, &self.g, self.el(a)?, self.el(d)?);
        Ok(r.map(|r| PyInverseAlong {
            b: r.b.index(),
            inner: r.inner,
            e: r.e_witness.index(),
            f: r.f_witness.index(),
            group_witness: r.group_witness.index(),
        }))
    }

    fn group_inverse(&self, a: Elem) -> PyResult<Option<usize>> {
        Ok(group_inverse(&self.s, &self.g, self.el(a)?).map(ElementId::index))
    }

    /// `(b, index)`.
    fn drazin(&self, a: Elem) -> PyResult<Option<(usize, usize)>> {
        Ok(drazin_inverse(&self.s, &self.g, self.el(a)?).map(|r| (r.b.index(), r.index)))
    }

    fn moore_penrose(&self, a: Elem) -> PyResult<Option<usize>> {
        let a = self.el(a)?;
        Ok(moore_penrose(self.need_star()?, &self.g, a).map(ElementId::index))
    }

    #[pyo3(signature = (checks = None))]
    fn verify(&self, checks: Option<Vec<String>>) -> PyResult<PyReport> {
        let checks = parse_checks(checks)?;
        Ok(PyReport {
            inner: run_checks(&self.s, &checks, self.star.as_ref()),
        })
    }

    fn __repr__(&self) -> String {
        format!("Semigroup(size={})", self.s.size())
    }
}

/// Run checks over every semigroup of order `1..=max_order`.
#[pyfunction]
#[pyo3(signature = (max_order, checks = None))]
fn sweep(py: Python<'_>, max_order: usize, checks: Option<Vec<String>>) -> PyResult<PyReport> {
    let checks = parse_checks(checks)?;
    let inner = py
        .detach(|| sweep_orders(max_order, &checks))
        .map_err(to_py)?;
    Ok(PyReport { inner })
}

#[pyfunction]
fn check_ids() -> Vec<&'static str> {
    CheckId::ALL.iter().map(|c| c.as_str()).collect()
}

#[pymodule]
fn pygreenbox(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySemigroup>()?;
    m.add_class::<PyInverseAlong>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add_function(wrap_pyfunction!(check_ids, m)?)?;
    Ok(())
}
