use increg::{expand, regularity, ChainSpec};

fn table_chain() -> ChainSpec {
    ChainSpec::new(10, [(1, 10), (2, 4), (3, 5), (7, 9)]).unwrap()
}

#[test]
fn regularity_table_over_gf2_and_gf3() {
    let spec = table_chain();
    let expected = [5, 4, 3, 4, 4, 3, 3, 3, 3, 2];
    for (k, &want) in expected.iter().enumerate() {
        let n = 10 + k;
        let g = expand(&spec, n).unwrap();
        for p in [2, 3] {
            let rep = regularity(&g, p).unwrap();
            assert_eq!(rep.value, Some(want), "n = {n}, p = {p}");
        }
    }
}
