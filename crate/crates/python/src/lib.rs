//! Python bindings for the `camina` engine.

use std::sync::Arc;

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use camina::chartable::CharacterTable as CoreTable;
use camina::clifford::CliffordPair;
use camina::orbits::LinearAction;
use camina::{construct, corpus, io, property_d, Error, Group as CoreGroup, Subgroup};

create_exception!(camina, TheoremViolation, PyException);

fn py_err(e: Error) -> PyErr {
    match e {
        Error::TheoremViolation(w) => TheoremViolation::new_err(w.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

trait IntoPy<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> IntoPy<T> for camina::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(py_err)
    }
}

/// A finite group given by its Cayley table.
#[pyclass(frozen)]
struct Group {
    inner: Arc<CoreGroup>,
}

impl Group {
    fn wrap(g: CoreGroup) -> Self {
        Group { inner: Arc::new(g) }
    }

    fn normal(&self, elements: &[usize]) -> PyResult<Subgroup> {
        let s = Subgroup::new(&self.inner, elements).py()?;
        self.inner
            .find_normal(s.elements())
            .py()?
            .ok_or_else(|| py_err(Error::NotNormal))
    }
}

#[pymethods]
impl Group {
    /// Builds a group from a constructor name such as `"agl1(8)"`.
    #[staticmethod]
    fn named(name: &str) -> PyResult<Self> {
        construct::by_name(name).py().map(Group::wrap)
    }

    #[staticmethod]
    #[pyo3(signature = (table, label = "G"))]
    fn from_table(table: Vec<Vec<usize>>, label: &str) -> PyResult<Self> {
        CoreGroup::from_table(label, &table).py().map(Group::wrap)
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        io::load_group(path).py().map(Group::wrap)
    }

    fn save(&self, path: &str) -> PyResult<()> {
        io::save_group(&self.inner, path).py()
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label().to_string()
    }

    fn mul(&self, a: usize, b: usize) -> PyResult<usize> {
        if a >= self.inner.order() || b >= self.inner.order() {
            return Err(PyValueError::new_err("element id out of range"));
        }
        Ok(self.inner.mul(a, b))
    }

    fn is_abelian(&self) -> bool {
        self.inner.is_abelian()
    }

    fn is_solvable(&self) -> PyResult<bool> {
        self.inner.is_solvable().py()
    }

    fn class_sizes(&self) -> Vec<usize> {
        self.inner.conjugacy_classes().sizes()
    }

    fn center(&self) -> Vec<usize> {
        self.inner.center().elements().to_vec()
    }

    fn derived_subgroup(&self) -> Vec<usize> {
        self.inner.derived_subgroup().elements().to_vec()
    }

    fn normal_subgroups(&self) -> PyResult<Vec<Vec<usize>>> {
        Ok(self.inner.normal_subgroups().py()?.iter().map(|s| s.elements().to_vec()).collect())
    }

    fn minimal_normal_subgroups(&self) -> PyResult<Vec<Vec<usize>>> {
        Ok(self
            .inner
            .minimal_normal_subgroups()
            .py()?
            .iter()
            .map(|s| s.elements().to_vec())
            .collect())
    }

    fn character_table(&self) -> PyResult<CharacterTable> {
        Ok(CharacterTable {
            inner: Arc::new(CoreTable::compute(&self.inner).py()?),
        })
    }

    fn cayley(&self) -> String {
        io::format_cayley(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Group({:?}, order={})", self.inner.label(), self.inner.order())
    }
}

/// Exact character table; values are cyclotomic literals such as
/// `"-1 + -1*z3^1"`.
#[pyclass(frozen)]
struct CharacterTable {
    inner: Arc<CoreTable>,
}

#[pymethods]
impl CharacterTable {
    fn degrees(&self) -> Vec<u64> {
        self.inner.degrees()
    }

    fn values(&self) -> Vec<Vec<String>> {
        self.inner
            .rows()
            .iter()
            .map(|r| r.values().iter().map(ToString::to_string).collect())
            .collect()
    }

    fn class_reps(&self) -> Vec<usize> {
        self.inner.group().conjugacy_classes().reps()
    }

    fn verify(&self) -> PyResult<()> {
        self.inner.verify().py()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }
}

#[pyfunction]
fn has_property_d(group: &Group, normal: Vec<usize>) -> PyResult<bool> {
    let n = group.normal(&normal)?;
    let t = CoreTable::compute(&group.inner).py()?;
    Ok(property_d::has_property_d(&t, &n))
}

/// Camina verdicts by the centralizer and vanishing criteria.
#[pyfunction]
fn camina_pair(group: &Group, normal: Vec<usize>) -> PyResult<(bool, bool)> {
    let n = group.normal(&normal)?;
    let t = CoreTable::compute(&group.inner).py()?;
    Ok((
        property_d::is_camina_centralizer(&group.inner, &n).py()?,
        property_d::is_camina_vanishing(&t, &n).py()?,
    ))
}

/// Classification reports for `normal`, or for every minimal normal
/// subgroup when it is omitted.
#[pyfunction]
#[pyo3(signature = (group, normal = None))]
fn classify<'py>(py: Python<'py>, group: &Group, normal: Option<Vec<usize>>) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let t = CoreTable::compute(&group.inner).py()?;
    let normals = match normal {
        Some(ids) => vec![group.normal(&ids)?],
        None => group.inner.minimal_normal_subgroups().py()?,
    };
    normals
        .iter()
        .map(|n| {
            let r = property_d::classify_theorem_a(&t, n).py()?;
            let d = PyDict::new(py);
            d.set_item("normal", r.normal.clone())?;
            d.set_item("degrees_over", r.degrees_over.clone())?;
            d.set_item("property_d", r.property_d)?;
            d.set_item("camina", r.camina_centralizer)?;
            d.set_item("type", r.kind.to_string())?;
            d.set_item("kuisch_case", r.kuisch_case.map(|c| c.to_string()))?;
            d.set_item("evidence", r.evidence.clone())?;
            Ok(d)
        })
        .collect()
}

#[pyfunction]
fn bch_scan<'py>(py: Python<'py>, group: &Group) -> PyResult<Bound<'py, PyDict>> {
    let t = CoreTable::compute(&group.inner).py()?;
    let r = property_d::bch_scan(&t).py()?;
    let d = PyDict::new(py);
    d.set_item("nonlinear_degrees", r.nonlinear_degrees)?;
    d.set_item("distinct", r.distinct)?;
    d.set_item("bucket", r.bucket.map(|b| b.to_string()))?;
    Ok(d)
}

/// One report per character of `normal`.
#[pyfunction]
fn higgs<'py>(py: Python<'py>, group: &Group, normal: Vec<usize>) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let n = group.normal(&normal)?;
    let t = CoreTable::compute(&group.inner).py()?;
    let pair = CliffordPair::new(&t, &n).py()?;
    (0..pair.sub_table().len())
        .map(|theta| {
            let h = pair.higgs(theta).py()?;
            let d = PyDict::new(py);
            d.set_item("theta", theta)?;
            d.set_item("invariant", h.invariant)?;
            d.set_item("count_above", h.count_above)?;
            d.set_item("degrees_above", h.degrees)?;
            d.set_item("distinct_degrees", h.distinct_degrees)?;
            d.set_item("ramification", h.fully_ramified)?;
            d.set_item("quotient_class", h.quotient_class.to_string())?;
            Ok(d)
        })
        .collect()
}

/// Orbit sizes on nonzero vectors of `GF(p)^n`.
#[pyfunction]
fn orbit_sizes(p: u64, n: usize, gens: Vec<Vec<Vec<u64>>>) -> PyResult<Vec<usize>> {
    Ok(LinearAction::new(p, n, &gens).py()?.orbit_sizes())
}

#[pyfunction]
fn dade_check(p: u64, n: usize, gens: Vec<Vec<Vec<u64>>>) -> PyResult<bool> {
    LinearAction::new(p, n, &gens).py()?.dade_duplicate_check().py()
}

/// Runs the shipped corpus and returns the report text.
#[pyfunction]
#[pyo3(signature = (filter = None))]
fn run_corpus(py: Python<'_>, filter: Option<String>) -> String {
    py.detach(|| corpus::run(&corpus::shipped(), filter.as_deref()).render())
}

#[pymodule]
fn _camina(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Group>()?;
    m.add_class::<CharacterTable>()?;
    m.add("TheoremViolation", m.py().get_type::<TheoremViolation>())?;
    m.add_function(wrap_pyfunction!(has_property_d, m)?)?;
    m.add_function(wrap_pyfunction!(camina_pair, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(bch_scan, m)?)?;
    m.add_function(wrap_pyfunction!(higgs, m)?)?;
    m.add_function(wrap_pyfunction!(orbit_sizes, m)?)?;
    m.add_function(wrap_pyfunction!(dade_check, m)?)?;
    m.add_function(wrap_pyfunction!(run_corpus, m)?)?;
    Ok(())
}
