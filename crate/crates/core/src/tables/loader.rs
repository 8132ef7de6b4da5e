use super::*;

fn tokenize(line: &str, lineno: usize) -> Result<Vec<String>, TableError> {
    let mut tokens = Vec::new();
    let mut chars = line.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c == '"' {
            chars.next();
            let mut s = String::new();
            loop {
                match chars.next() {
                    Some('"') => break,
                    Some(ch) => s.push(ch),
                    None => return Err(syntax(lineno, "unterminated citation string")),
                }
            }
            // keep the quote marker so an empty citation is still recognizable
            tokens.push(format!("\"{s}"));
        } else {
            let mut s = String::new();
            while let Some(&ch) = chars.peek() {
                if ch.is_whitespace() || ch == '"' {
                    break;
                }
                s.push(ch);
                chars.next();
            }
            tokens.push(s);
        }
    }
    Ok(tokens)
}

fn syntax(line: usize, message: impl Into<String>) -> TableError {
    TableError::Syntax { line, message: message.into() }
}

struct Record {
    head: Vec<String>,
    group: Option<FgAbelianGroup>,
    source: String,
    provenance: Provenance,
}

fn split_record(tokens: Vec<String>, lineno: usize) -> Result<Record, TableError> {
    let Some(src_at) = tokens.iter().position(|t| t == "SRC") else {
        return Err(TableError::Uncited { line: lineno });
    };
    let source = match tokens.get(src_at + 1) {
        Some(t) if t.starts_with('"') && t.len() > 1 => t[1..].trim().to_string(),
        _ => return Err(TableError::Uncited { line: lineno }),
    };
    if source.is_empty() {
        return Err(TableError::Uncited { line: lineno });
    }
    let mut provenance = Provenance::Cited;
    match &tokens[src_at + 2..] {
        [] => {}
        [p, v] if p == "PROV" => {
            provenance = match v.as_str() {
                "transcribed" => Provenance::Transcribed,
                "cited" => Provenance::Cited,
                "derived" => Provenance::Derived,
                other => return Err(syntax(lineno, format!("unknown provenance `{other}`"))),
            }
        }
        rest => return Err(syntax(lineno, format!("unexpected trailing tokens {rest:?}"))),
    }
    let before = &tokens[..src_at];
    let (head, group) = match before.iter().position(|t| t == "GROUP") {
        Some(at) => {
            let literal = before[at + 1..].join(" ");
            let group = literal.parse::<FgAbelianGroup>().map_err(|e| syntax(lineno, e.to_string()))?;
            (before[..at].to_vec(), Some(group))
        }
        None => (before.to_vec(), None),
    };
    Ok(Record { head, group, source, provenance })
}

fn ints<const N: usize>(fields: &[String], lineno: usize) -> Result<[u32; N], TableError> {
    if fields.len() != N {
        return Err(syntax(lineno, format!("expected {N} integer fields, found {}", fields.len())));
    }
    let mut out = [0u32; N];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f.parse().map_err(|_| syntax(lineno, format!("`{f}` is not a nonnegative integer")))?;
    }
    Ok(out)
}

fn suspension_kind(token: &str, lineno: usize) -> Result<SuspensionKind, TableError> {
    match token {
        "inj" => Ok(SuspensionKind::Injective),
        "noninj" => Ok(SuspensionKind::NonInjective),
        "trivial" => Ok(SuspensionKind::Trivial),
        other => Err(syntax(lineno, format!("unknown suspension kind `{other}`"))),
    }
}

fn insert_unique<K: Ord + std::fmt::Debug, V>(
    map: &mut BTreeMap<K, V>,
    key: K,
    value: V,
    lineno: usize,
) -> Result<(), TableError> {
    let label = format!("{key:?}");
    if map.insert(key, value).is_some() {
        return Err(TableError::Duplicate { line: lineno, key: label });
    }
    Ok(())
}

/// Parses and validates a table file.
pub fn parse_tables(text: &str) -> Result<HomotopyTables, TableError> {
    let mut t = HomotopyTables::default();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split_once('#').map_or(raw, |(before, _)| before).trim();
        if line.is_empty() {
            continue;
        }
        let tokens = tokenize(line, lineno)?;
        let rec = split_record(tokens, lineno)?;
        let (kind, fields) = rec.head.split_first().ok_or_else(|| syntax(lineno, "empty record"))?;
        let need_group = |rec: &Record| rec.group.clone().ok_or_else(|| syntax(lineno, "missing GROUP"));
        let entry = |group: FgAbelianGroup| GroupEntry { group, source: rec.source.clone(), provenance: rec.provenance };
        match kind.as_str() {
            "STEM" => {
                let [k] = ints::<1>(fields, lineno)?;
                insert_unique(&mut t.stems, k, entry(need_group(&rec)?), lineno)?;
            }
            "PI" => {
                let [m, n] = ints::<2>(fields, lineno)?;
                if m == 0 || n == 0 {
                    return Err(syntax(lineno, "sphere degrees start at 1"));
                }
                insert_unique(&mut t.spheres, (m, n), entry(need_group(&rec)?), lineno)?;
            }
            "VPI" => {
                let [m, r, k] = ints::<3>(fields, lineno)?;
                if k == 0 || k >= r {
                    return Err(syntax(lineno, format!("V({r},{k}) needs 0 < k < r")));
                }
                insert_unique(&mut t.stiefel, (m, r, k), entry(need_group(&rec)?), lineno)?;
            }
            "E" | "EINF" => {
                let (nums, kind_tok) = match fields.split_last() {
                    Some((last, nums)) => (nums, last),
                    None => return Err(syntax(lineno, "missing suspension kind")),
                };
                let [m, n] = ints::<2>(nums, lineno)?;
                if n < 2 || m < n {
                    return Err(syntax(lineno, "suspension records need m >= n >= 2"));
                }
                let record = SuspensionRecord { kind: suspension_kind(kind_tok, lineno)?, source: rec.source.clone() };
                if kind == "EINF" && record.kind == SuspensionKind::Trivial {
                    return Err(syntax(lineno, "EINF records are inj or noninj"));
                }
                let map = if kind == "E" { &mut t.e_records } else { &mut t.einf_records };
                insert_unique(map, (m, n), record, lineno)?;
            }
            "TWOTORSION" => {
                for f in fields {
                    let k: u32 = f.parse().map_err(|_| syntax(lineno, format!("`{f}` is not a stem index")))?;
                    t.declared_two_torsion.insert(k);
                }
            }
            other => return Err(syntax(lineno, format!("unknown record kind `{other}`"))),
        }
    }
    validate(&t)?;
    Ok(t)
}

fn validate(t: &HomotopyTables) -> Result<(), TableError> {
    for (&(m, n), e) in &t.spheres {
        let impossible = |reason: &str| TableError::ImpossibleEntry { m, n, entry: e.group.to_string(), reason: reason.into() };
        if m < n && !e.group.is_trivial() {
            return Err(impossible("groups below the dimension vanish"));
        }
        if m == n && e.group != FgAbelianGroup::integers() {
            return Err(impossible("pi_n(S^n) is Z"));
        }
        if n == 1 && m > 1 && !e.group.is_trivial() {
            return Err(impossible("higher homotopy of the circle vanishes"));
        }
        if n >= 2 && m > n && m <= 2 * n - 2 {
            if let Some(stem) = t.stems.get(&(m - n)) {
                if stem.group != e.group {
                    return Err(TableError::Stability { m, n, entry: e.group.to_string(), stem: stem.group.to_string() });
                }
            }
        }
    }
    for &k in &t.declared_two_torsion {
        if let Some(stem) = t.stems.get(&k) {
            if !stem.group.annihilated_by(2) {
                return Err(TableError::TwoTorsion { k, group: stem.group.to_string() });
            }
        }
    }
    for (&(m, n), rec) in &t.e_records {
        let source = t.suspension_source(m, n);
        check_record(m, n, rec, source.as_ref(), e_range_rule(m, n, source.as_ref()), t.pi_sphere(m, n).as_ref(), "pi_m(S^n)")?;
    }
    for (&(m, n), rec) in &t.einf_records {
        let source = t.suspension_source(m, n);
        check_record(m, n, rec, source.as_ref(), einf_range_rule(m, n, source.as_ref()), t.pi_stable(m - n).as_ref(), "stem")?;
    }
    // range rules against the counting bound on every tabulated pair
    for n in 2..=16u32 {
        for m in n..=(3 * n) {
            let source = t.suspension_source(m, n);
            let e = e_range_rule(m, n, source.as_ref());
            let einf = einf_range_rule(m, n, source.as_ref());
            let e_count = counting_no(source.as_ref(), t.pi_sphere(m, n).as_ref(), "pi_m(S^n)");
            let einf_count = counting_no(source.as_ref(), t.pi_stable(m - n).as_ref(), "stem");
            if e.value.is_yes() && e_count.value.is_no() {
                return Err(TableError::RangeConflict { m, n, reason: format!("{} vs {}", e.reason, e_count.reason) });
            }
            if einf.value.is_yes() && einf_count.value.is_no() {
                return Err(TableError::RangeConflict { m, n, reason: format!("{} vs {}", einf.reason, einf_count.reason) });
            }
        }
    }
    if let Ok(arg) = t.ehp_order_check() {
        if arg.first_e_injective && t.suspension_e(8, 4).value.is_no() {
            return Err(TableError::Ehp("E at (8,4) is recorded non-injective but the orders force injectivity".into()));
        }
        if arg.second_e_injective && t.suspension_e(7, 4).value.is_no() {
            return Err(TableError::Ehp("E at (7,4) is recorded non-injective but the orders force injectivity".into()));
        }
    }
    Ok(())
}

fn check_record(
    m: u32,
    n: u32,
    rec: &SuspensionRecord,
    source: Option<&FgAbelianGroup>,
    range: Fact,
    target: Option<&FgAbelianGroup>,
    target_name: &str,
) -> Result<(), TableError> {
    let source_trivial = source.is_some_and(FgAbelianGroup::is_trivial);
    let says_no = match rec.kind {
        SuspensionKind::Injective => false,
        SuspensionKind::NonInjective => true,
        SuspensionKind::Trivial => !source_trivial,
    };
    if says_no && source_trivial {
        return Err(TableError::RangeConflict { m, n, reason: "non-injective record with trivial source".into() });
    }
    if says_no && range.value.is_yes() {
        return Err(TableError::RangeConflict { m, n, reason: format!("record `{}` but {}", rec.source, range.reason) });
    }
    let count = counting_no(source, target, target_name);
    if !says_no && count.value.is_no() {
        return Err(TableError::RangeConflict { m, n, reason: format!("record `{}` but {}", rec.source, count.reason) });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_uncited_record() {
        let err = parse_tables("STEM 1 GROUP Z/2\n").unwrap_err();
        assert!(matches!(err, TableError::Uncited { line: 1 }));
        let err = parse_tables("STEM 1 GROUP Z/2 SRC \"\"\n").unwrap_err();
        assert!(matches!(err, TableError::Uncited { line: 1 }));
    }

    #[test]
    fn rejects_stability_violation() {
        let text = "STEM 1 GROUP Z/2 SRC \"a\"\nPI 5 4 GROUP Z/4 SRC \"b\"\n";
        assert!(matches!(parse_tables(text), Err(TableError::Stability { m: 5, n: 4, .. })));
    }

    #[test]
    fn rejects_bad_two_torsion_declaration() {
        let text = "STEM 3 GROUP Z/24 SRC \"a\"\nTWOTORSION 3 SRC \"b\"\n";
        assert!(matches!(parse_tables(text), Err(TableError::TwoTorsion { k: 3, .. })));
    }

    #[test]
    fn rejects_record_against_range_rule() {
        let text = "E 6 4 noninj SRC \"a\"\n";
        assert!(matches!(parse_tables(text), Err(TableError::RangeConflict { m: 6, n: 4, .. })));
        // source pi_2(S^1) is trivial
        let text = "E 3 2 trivial SRC \"a\"\nE 5 2 noninj SRC \"b\"\n";
        assert!(matches!(parse_tables(text), Err(TableError::RangeConflict { m: 5, n: 2, .. })));
    }

    #[test]
    fn rejects_impossible_entries() {
        assert!(parse_tables("PI 2 3 GROUP Z SRC \"a\"\n").is_err());
        assert!(parse_tables("PI 3 3 GROUP Z/2 SRC \"a\"\n").is_err());
        assert!(parse_tables("VPI 3 2 2 GROUP Z SRC \"a\"\n").is_err());
    }

    #[test]
    fn rejects_syntax_errors() {
        assert!(matches!(parse_tables("FOO 1 SRC \"a\"\n"), Err(TableError::Syntax { line: 1, .. })));
        assert!(matches!(parse_tables("\nSTEM x GROUP Z SRC \"a\"\n"), Err(TableError::Syntax { line: 2, .. })));
        assert!(matches!(parse_tables("STEM 1 GROUP Z/2 SRC \"a"), Err(TableError::Syntax { .. })));
        assert!(matches!(
            parse_tables("STEM 1 GROUP Z/2 SRC \"a\"\nSTEM 1 GROUP Z/2 SRC \"a\"\n"),
            Err(TableError::Duplicate { line: 2, .. })
        ));
    }

    #[test]
    fn comments_and_provenance() {
        let t = parse_tables("# header\nSTEM 8 GROUP Z/2 + Z/2 SRC \"x\" PROV transcribed # trailing\n").unwrap();
        assert_eq!(t.stem_entry(8).unwrap().provenance, Provenance::Transcribed);
    }
}
