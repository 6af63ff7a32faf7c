use lcd_core::tabulate::{
    build_lcd_table, build_lck_table, cross_check, emit, BuildOptions, CellCache, Table,
    TableFormat, TableKind, STARRED_LCK_CELLS,
};

#[test]
fn tables_are_mutually_consistent() {
    let opts = BuildOptions::default();
    let lcd = build_lcd_table(10, &opts).unwrap();
    let lck = build_lck_table(10, Some(&lcd), &opts).unwrap();
    assert!(lcd.is_complete() && lck.is_complete());
    assert_eq!(cross_check(&lcd, &lck), Vec::<String>::new());
}

#[test]
fn starred_cells_carry_pinned_values() {
    let lck = build_lck_table(12, None, &BuildOptions::default()).unwrap();
    for (n, d, k) in STARRED_LCK_CELLS {
        let e = lck.get(n, d).unwrap();
        assert!(e.starred, "LCK[{n},{d}] not starred");
        assert_eq!(e.value, k, "LCK[{n},{d}]");
    }
    assert_eq!(
        lck.entries().filter(|e| e.starred).count(),
        STARRED_LCK_CELLS.len()
    );
}

#[test]
fn interrupted_build_resumes_from_cache() {
    let dir = tempfile::tempdir().unwrap();
    let opts = BuildOptions {
        cache: Some(CellCache::open(dir.path()).unwrap()),
        ..BuildOptions::default()
    };
    let partial = build_lcd_table(6, &opts).unwrap();
    let full = build_lcd_table(9, &opts).unwrap();
    for e in partial.entries() {
        assert_eq!(full.get(e.n, e.col), Some(e));
    }
    let fresh = build_lcd_table(9, &BuildOptions::default()).unwrap();
    assert_eq!(
        emit(&full, TableFormat::Json).unwrap(),
        emit(&fresh, TableFormat::Json).unwrap()
    );
}

#[test]
fn json_reingest_preserves_witnesses() {
    let lcd = build_lcd_table(8, &BuildOptions::default()).unwrap();
    let back = Table::from_json_str(&emit(&lcd, TableFormat::Json).unwrap()).unwrap();
    assert_eq!(back.kind, TableKind::Lcd);
    assert_eq!(back, lcd);
    for e in back.entries() {
        e.verify().unwrap();
    }
}
