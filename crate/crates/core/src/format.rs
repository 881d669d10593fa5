//! The on-disk object format: one JSON document per algebra, homomorphism,
//! action, or split extension, discriminated by a "kind" tag. Parsing is
//! eager about semantics (associativity, multiplicativity, action axioms,
//! extension identities all run before anything is returned), and the
//! writers emit a canonical form so that parse then serialize is the
//! identity on canonical files.
//!
//! Schema sketch:
//! ```text
//! algebra   {kind, field: {kind: "prime", p} | {kind: "rational"}, dim,
//!            basis?: [names], products: [[i, j, [[k, coeff], ...]], ...]}
//! hom       {kind, source: <algebra|path>, target: <algebra|path>, matrix}
//! action    {kind, base, space, left: [matrix per base element], right}
//! extension {kind, total, base, kernel, alpha, beta, kappa}
//! ```
//! Coefficients are integers (canonical residues for F_p) or strings like
//! "-3/7" for rationals that need a denominator. A nested algebra may be
//! replaced by a path string, resolved relative to the referencing file.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, AlgebraHom};
use crate::error::{Error, Result};
use crate::extension::{Action, SplitExtension};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarRepr {
    Int(i64),
    Str(String),
}

fn scalar_from_repr(field: Field, repr: &ScalarRepr) -> Result<Scalar> {
    match repr {
        ScalarRepr::Int(n) => field.parse_scalar(&n.to_string()),
        ScalarRepr::Str(s) => field.parse_scalar(s),
    }
}

fn scalar_to_repr(s: &Scalar) -> ScalarRepr {
    match s {
        Scalar::Prime(v) => ScalarRepr::Int(*v as i64),
        Scalar::Rational(r) => {
            use num::ToPrimitive;
            if r.is_integer() {
                if let Some(n) = r.numer().to_i64() {
                    return ScalarRepr::Int(n);
                }
            }
            ScalarRepr::Str(s.to_string())
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub field: Field,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    /// Sparse table: one entry [i, j, terms] per product with any nonzero
    /// coefficient, terms being [k, coeff] pairs. Canonical form lists
    /// entries in lexicographic (i, j) order, terms by ascending k, zero
    /// coefficients omitted.
    pub products: Vec<(usize, usize, Vec<(usize, ScalarRepr)>)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Path(String),
    Inline(AlgebraFile),
}

type MatrixRepr = Vec<Vec<ScalarRepr>>;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HomFile {
    pub source: AlgebraRef,
    pub target: AlgebraRef,
    pub matrix: MatrixRepr,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ActionFile {
    pub base: AlgebraRef,
    pub space: AlgebraRef,
    pub left: Vec<MatrixRepr>,
    pub right: Vec<MatrixRepr>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExtensionFile {
    pub total: AlgebraRef,
    pub base: AlgebraRef,
    pub kernel: AlgebraRef,
    pub alpha: MatrixRepr,
    pub beta: MatrixRepr,
    pub kappa: MatrixRepr,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FileObject {
    Algebra(AlgebraFile),
    Hom(HomFile),
    Action(ActionFile),
    Extension(ExtensionFile),
}

/// A fully validated parse result.
#[derive(Debug, Clone)]
pub enum Parsed {
    Algebra(Algebra),
    Hom(AlgebraHom),
    Action(Action),
    Extension(SplitExtension),
}

impl Parsed {
    pub fn kind(&self) -> &'static str {
        match self {
            Parsed::Algebra(_) => "algebra",
            Parsed::Hom(_) => "hom",
            Parsed::Action(_) => "action",
            Parsed::Extension(_) => "extension",
        }
    }
}

fn invalid(file: &str, err: impl std::fmt::Display) -> Error {
    Error::InvalidFile {
        file: file.to_string(),
        message: err.to_string(),
    }
}

fn build_algebra(file: &str, af: &AlgebraFile) -> Result<Algebra> {
    let field = match af.field {
        Field::Prime { p } => Field::prime(p)?,
        Field::Rational => Field::Rational,
    };
    let names = match &af.basis {
        Some(names) => {
            if names.len() != af.dim {
                return Err(invalid(
                    file,
                    format!("basis lists {} names for dim {}", names.len(), af.dim),
                ));
            }
            names.clone()
        }
        None => (0..af.dim).map(|i| format!("e{i}")).collect(),
    };
    let mut table = vec![field.zero(); af.dim * af.dim * af.dim];
    for (i, j, terms) in &af.products {
        if *i >= af.dim || *j >= af.dim {
            return Err(invalid(file, format!("product index ({i}, {j}) out of range")));
        }
        for (k, coeff) in terms {
            if *k >= af.dim {
                return Err(invalid(file, format!("term index {k} out of range")));
            }
            let slot = &mut table[(*i * af.dim + *j) * af.dim + *k];
            if !slot.is_zero() {
                return Err(invalid(file, format!("duplicate term ({i}, {j}, {k})")));
            }
            *slot = scalar_from_repr(field, coeff).map_err(|e| invalid(file, e))?;
        }
    }
    Algebra::new(field, names, table).map_err(|e| invalid(file, e))
}

fn resolve_algebra(file: &str, base_dir: Option<&Path>, r: &AlgebraRef) -> Result<Algebra> {
    match r {
        AlgebraRef::Inline(af) => build_algebra(file, af),
        AlgebraRef::Path(rel) => {
            let path = match base_dir {
                Some(dir) => dir.join(rel),
                None => PathBuf::from(rel),
            };
            match parse_file(&path)? {
                Parsed::Algebra(a) => Ok(a),
                other => Err(invalid(
                    file,
                    format!("referenced file {} holds a {}, not an algebra", rel, other.kind()),
                )),
            }
        }
    }
}

fn build_matrix(file: &str, field: Field, rows: usize, cols: usize, m: &MatrixRepr) -> Result<Matrix> {
    if m.len() != rows || m.iter().any(|r| r.len() != cols) {
        return Err(invalid(file, format!("matrix is not {rows} x {cols}")));
    }
    let mut out = Vec::with_capacity(rows);
    for row in m {
        let mut r = Vec::with_capacity(cols);
        for entry in row {
            r.push(scalar_from_repr(field, entry).map_err(|e| invalid(file, e))?);
        }
        out.push(r);
    }
    Matrix::from_rows(field, out, cols).map_err(|e| invalid(file, e))
}

fn require_same_field(file: &str, a: &Algebra, b: &Algebra) -> Result<()> {
    if a.field() != b.field() {
        return Err(invalid(file, Error::FieldMismatch(a.field(), b.field())));
    }
    Ok(())
}

fn build_object(file: &str, base_dir: Option<&Path>, obj: &FileObject) -> Result<Parsed> {
    match obj {
        FileObject::Algebra(af) => Ok(Parsed::Algebra(build_algebra(file, af)?)),
        FileObject::Hom(hf) => {
            let source = resolve_algebra(file, base_dir, &hf.source)?;
            let target = resolve_algebra(file, base_dir, &hf.target)?;
            require_same_field(file, &source, &target)?;
            let matrix = build_matrix(file, source.field(), target.dim(), source.dim(), &hf.matrix)?;
            AlgebraHom::new(source, target, matrix)
                .map(Parsed::Hom)
                .map_err(|e| invalid(file, e))
        }
        FileObject::Action(af) => {
            let base = resolve_algebra(file, base_dir, &af.base)?;
            let space = resolve_algebra(file, base_dir, &af.space)?;
            require_same_field(file, &base, &space)?;
            if af.left.len() != base.dim() || af.right.len() != base.dim() {
                return Err(invalid(file, "need one left and one right operator per base element"));
            }
            let m = space.dim();
            let mut left = Vec::with_capacity(base.dim());
            let mut right = Vec::with_capacity(base.dim());
            for op in &af.left {
                left.push(build_matrix(file, space.field(), m, m, op)?);
            }
            for op in &af.right {
                right.push(build_matrix(file, space.field(), m, m, op)?);
            }
            Action::new(base, space, left, right)
                .map(Parsed::Action)
                .map_err(|e| invalid(file, e))
        }
        FileObject::Extension(ef) => {
            let total = resolve_algebra(file, base_dir, &ef.total)?;
            let base = resolve_algebra(file, base_dir, &ef.base)?;
            let kernel = resolve_algebra(file, base_dir, &ef.kernel)?;
            require_same_field(file, &total, &base)?;
            require_same_field(file, &total, &kernel)?;
            let f = total.field();
            let alpha = build_matrix(file, f, base.dim(), total.dim(), &ef.alpha)?;
            let beta = build_matrix(file, f, total.dim(), base.dim(), &ef.beta)?;
            let kappa = build_matrix(file, f, total.dim(), kernel.dim(), &ef.kappa)?;
            let alpha = AlgebraHom::new(total.clone(), base.clone(), alpha).map_err(|e| invalid(file, e))?;
            let beta = AlgebraHom::new(base, total.clone(), beta).map_err(|e| invalid(file, e))?;
            let kappa = AlgebraHom::new(kernel, total, kappa).map_err(|e| invalid(file, e))?;
            SplitExtension::new(alpha, beta, kappa)
                .map(Parsed::Extension)
                .map_err(|e| invalid(file, e))
        }
    }
}

/// Parses and validates a document from text. `base_dir` anchors relative
/// path references; `file` only labels error messages.
pub fn parse_str(text: &str, base_dir: Option<&Path>, file: &str) -> Result<Parsed> {
    let obj: FileObject = serde_json::from_str(text).map_err(|e| Error::Parse {
        file: file.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    build_object(file, base_dir, &obj)
}

pub fn parse_file(path: &Path) -> Result<Parsed> {
    let text = fs::read_to_string(path).map_err(|e| Error::InvalidFile {
        file: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_str(&text, path.parent(), &path.display().to_string())
}

fn algebra_repr(a: &Algebra) -> AlgebraFile {
    let mut products = Vec::new();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let terms: Vec<(usize, ScalarRepr)> = (0..a.dim())
                .filter(|&k| !a.structure_constant(i, j, k).is_zero())
                .map(|k| (k, scalar_to_repr(a.structure_constant(i, j, k))))
                .collect();
            if !terms.is_empty() {
                products.push((i, j, terms));
            }
        }
    }
    AlgebraFile {
        field: a.field(),
        dim: a.dim(),
        basis: Some(a.basis_names().to_vec()),
        products,
    }
}

fn matrix_repr(m: &Matrix) -> MatrixRepr {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(scalar_to_repr).collect())
        .collect()
}

/// Inline rendering for short values; keeps product tables and matrices
/// readable instead of one number per line.
fn inline_value(v: &serde_json::Value) -> Option<String> {
    let s = match v {
        serde_json::Value::Object(map) => {
            let parts: Option<Vec<String>> = map
                .iter()
                .map(|(k, val)| {
                    Some(format!(
                        "{}: {}",
                        serde_json::Value::String(k.clone()),
                        inline_value(val)?
                    ))
                })
                .collect();
            format!("{{{}}}", parts?.join(", "))
        }
        serde_json::Value::Array(items) => {
            let parts: Option<Vec<String>> = items.iter().map(inline_value).collect();
            format!("[{}]", parts?.join(", "))
        }
        other => other.to_string(),
    };
    (s.len() <= 60).then_some(s)
}

fn write_value(v: &serde_json::Value, indent: usize, out: &mut String) {
    if let Some(s) = inline_value(v) {
        out.push_str(&s);
        return;
    }
    let pad = "  ".repeat(indent + 1);
    match v {
        serde_json::Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, val)) in map.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&serde_json::Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(val, indent + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push('}');
        }
        serde_json::Value::Array(items) => {
            out.push_str("[\n");
            for (i, val) in items.iter().enumerate() {
                out.push_str(&pad);
                write_value(val, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

fn render(obj: &FileObject) -> String {
    let value = serde_json::to_value(obj).expect("file objects serialize");
    let mut s = String::new();
    write_value(&value, 0, &mut s);
    s.push('\n');
    s
}

/// Canonical serialization; inlines every nested algebra.
pub fn algebra_to_json(a: &Algebra) -> String {
    render(&FileObject::Algebra(algebra_repr(a)))
}

pub fn hom_to_json(h: &AlgebraHom) -> String {
    render(&FileObject::Hom(HomFile {
        source: AlgebraRef::Inline(algebra_repr(h.source())),
        target: AlgebraRef::Inline(algebra_repr(h.target())),
        matrix: matrix_repr(h.matrix()),
    }))
}

pub fn action_to_json(act: &Action) -> String {
    render(&FileObject::Action(ActionFile {
        base: AlgebraRef::Inline(algebra_repr(act.base())),
        space: AlgebraRef::Inline(algebra_repr(act.space())),
        left: act.left().iter().map(matrix_repr).collect(),
        right: act.right().iter().map(matrix_repr).collect(),
    }))
}

pub fn extension_to_json(e: &SplitExtension) -> String {
    render(&FileObject::Extension(ExtensionFile {
        total: AlgebraRef::Inline(algebra_repr(e.total())),
        base: AlgebraRef::Inline(algebra_repr(e.base())),
        kernel: AlgebraRef::Inline(algebra_repr(e.kernel_algebra())),
        alpha: matrix_repr(e.alpha().matrix()),
        beta: matrix_repr(e.beta().matrix()),
        kappa: matrix_repr(e.kappa().matrix()),
    }))
}

pub fn parsed_to_json(p: &Parsed) -> String {
    match p {
        Parsed::Algebra(a) => algebra_to_json(a),
        Parsed::Hom(h) => hom_to_json(h),
        Parsed::Action(a) => action_to_json(a),
        Parsed::Extension(e) => extension_to_json(e),
    }
}
