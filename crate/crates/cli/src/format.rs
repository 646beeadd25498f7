use softset_core::SoftSet;

pub(crate) fn soft_set_text(s: &SoftSet) -> String {
    let mut out = format!("universe: {}\n", s.universe().elements().join(", "));
    let width = s
        .attributes()
        .iter()
        .map(|a| a.chars().count())
        .max()
        .unwrap_or(0);
    for (a, v) in s.iter() {
        let members: Vec<&str> = s.universe().names_of(v).collect();
        out.push_str(&format!("{a:<width$} -> {{{}}}\n", members.join(", ")));
    }
    out
}

/// The matrix with universe elements as row labels and attributes as
/// column headers; entries are right-aligned under their header.
pub(crate) fn matrix_table(s: &SoftSet) -> String {
    let m = s.to_matrix();
    let label_width = s
        .universe()
        .elements()
        .iter()
        .map(|e| e.chars().count())
        .max()
        .unwrap_or(0);
    let widths: Vec<usize> = s
        .attributes()
        .iter()
        .map(|a| a.chars().count().max(1))
        .collect();

    let mut out = format!("{:label_width$}", "");
    for (a, w) in s.attributes().iter().zip(&widths) {
        out.push_str(&format!("  {a:>w$}"));
    }
    out.push('\n');
    for (i, e) in s.universe().elements().iter().enumerate() {
        out.push_str(&format!("{e:<label_width$}"));
        for (j, w) in widths.iter().enumerate() {
            out.push_str(&format!("  {:>w$}", m.get(i, j) as u8));
        }
        out.push('\n');
    }
    out
}
