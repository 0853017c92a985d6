use flipcayley::{AlgebraElement, StarAlgebra};

/// Each property with `None` when it holds and a witness otherwise.
pub fn properties(a: &StarAlgebra) -> Vec<(&'static str, Option<String>)> {
    vec![
        (
            "commutative",
            a.commutativity_witness().map(|w| w.to_string()),
        ),
        (
            "associative",
            a.associativity_witness().map(|w| w.to_string()),
        ),
        (
            "alternative",
            a.alternativity_witness().map(|w| w.to_string()),
        ),
        ("flexible", a.flexibility_witness().map(|w| w.to_string())),
    ]
}

pub fn summary(a: &StarAlgebra) -> String {
    let mut out = format!("dim {}  unit e{}\n", a.dim(), a.structure().unit_index());
    for (name, w) in properties(a) {
        out.push_str(&format!(
            "{name:<12} {}\n",
            if w.is_none() { "yes" } else { "no" }
        ));
    }
    let trivial = if a.involution().is_trivial() {
        "trivial"
    } else {
        "nontrivial"
    };
    out.push_str(&format!("{:<12} {trivial}\n", "involution"));
    out
}

fn entry(v: &AlgebraElement) -> String {
    let s = v.to_string();
    if v.support_len() > 1 {
        format!("({s})")
    } else {
        s
    }
}

/// Aligned table whose row `i`, column `j` entry is `e_i e_j`.
pub fn table(a: &StarAlgebra) -> String {
    let n = a.dim();
    let header: Vec<String> = (0..n).map(|j| format!("e{j}")).collect();
    let rows: Vec<Vec<String>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| entry(&a.mul(&a.basis(i), &a.basis(j)).expect("basis elements")))
                .collect()
        })
        .collect();
    let width = rows
        .iter()
        .flatten()
        .chain(header.iter())
        .map(String::len)
        .max()
        .unwrap_or(1);
    let label = format!("e{}", n.saturating_sub(1)).len();
    let mut out = format!("{:>label$} |", "");
    for h in &header {
        out.push_str(&format!(" {h:>width$}"));
    }
    out.push('\n');
    out.push_str(&format!(
        "{}-+{}\n",
        "-".repeat(label),
        "-".repeat((width + 1) * n)
    ));
    for (i, row) in rows.iter().enumerate() {
        out.push_str(&format!("{:>label$} |", format!("e{i}")));
        for cell in row {
            out.push_str(&format!(" {cell:>width$}"));
        }
        out.push('\n');
    }
    out
}
