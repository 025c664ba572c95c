// A two-site graph operator with a magnetic phase, built in code.
//
//     cargo run --example graph_operator

use bloch_periods::algebra::{parse_cyclotomic, parse_rational, Cyclotomic};
use bloch_periods::operator::{build_graph_symbol, Edge, GraphSpec, OperatorSpec};
use bloch_periods::variety::{charpoly, squarefree_test, CriteriaConfig};

pub fn main() {
    let one = Cyclotomic::from_integer(1);
    let i = parse_cyclotomic("cyc(4)[0,1]").unwrap();
    let hop = |from, to, shift: Vec<i64>, w: &Cyclotomic| {
        let e = Edge::new(from, to, shift, w.clone());
        [e.reversed(), e]
    };
    let mut edges = Vec::new();
    edges.extend(hop(0, 1, vec![0, 0], &one));
    edges.extend(hop(1, 0, vec![1, 0], &one));
    edges.extend(hop(0, 0, vec![0, 1], &i));
    edges.extend(hop(1, 1, vec![0, 1], &i.conj()));

    let g = GraphSpec::new(2, 2, vec![parse_rational("1/2").unwrap(), parse_rational("-1/2").unwrap()], edges).unwrap();
    let spec = OperatorSpec::Graph(g.clone());
    println!("{} with {} edges, hash {}", spec.kind(), g.edges.len(), &spec.content_hash()[..16]);

    let a = build_graph_symbol(&g);
    println!("A(z) =\n{a}");
    let p = charpoly(&a).unwrap();
    println!("det(A - λ) = {}", p.poly());
    let sf = squarefree_test(p.poly(), &CriteriaConfig::default(), 0).unwrap();
    println!("square-free: {:?} ({:?})", sf.verdict, sf.method);
}
