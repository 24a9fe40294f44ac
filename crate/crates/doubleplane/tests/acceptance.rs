//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Every expected value is exact; there are no tolerances anywhere.

use doubleplane::abgroup::FGAbelianGroup;
use doubleplane::arrangement::{
    build_line_graph, hyperelliptic_branch_graph, line_function_divisor, CurveDivisor, ProjLine,
};
use doubleplane::classgroup::{
    cl_even_case_descriptor, cl_hyperelliptic_doubleplane, cover_is_split,
    hyperelliptic_two_torsion, nagata_class_group, pic_s, pic_s_even_case, pic_t,
    quadratic_covers, ClassGroupDescriptor, NagataPresentation,
};
use doubleplane::crossedprod::CrossedAlgebra;
use doubleplane::polyring::{parse_poly, rat_int, HyperellipticSpec, Poly, Rat, Var};
use doubleplane::scenario::{
    intersection_data, run_hyperelliptic_scenario, run_lines_scenario,
};
use doubleplane::valuation::{tame_symbol, DivisorTable, MonomialElem, PrimeDivisor};

fn criterion(n: u32, what: &str) {
    println!("criterion {n:2}: PASS  ({what})");
}

fn concurrent_coeffs(n: usize) -> Vec<(Rat, Rat)> {
    let mut out = vec![(rat_int(1), rat_int(0)), (rat_int(0), rat_int(1))];
    for i in 3..=n {
        out.push((rat_int(1), rat_int(-(i as i64 - 2))));
    }
    out.truncate(n);
    out
}

fn concurrent_lines(n: usize) -> Vec<(String, ProjLine)> {
    concurrent_coeffs(n)
        .into_iter()
        .enumerate()
        .map(|(i, (a, b))| (format!("F{}", i + 1), ProjLine::through_origin(a, b)))
        .collect()
}

fn spec_of(mults: &[u64]) -> HyperellipticSpec {
    let roots = (0..mults.len()).map(|i| rat_int(i as i64 + 1)).collect();
    HyperellipticSpec::new(roots, mults.to_vec()).unwrap()
}

const SPEC_MATRIX: [&[u64]; 6] = [&[1, 1, 1], &[2, 4], &[2, 2], &[3, 3], &[4], &[6, 10, 15]];

/// Cl(T) = (Z/2)^{n-1} from the Nagata presentation, odd n up to 11.
#[test]
fn criterion_01_class_group_odd_lines() {
    for n in [3usize, 5, 7, 9, 11] {
        let mut relations = vec![vec![1i64; n]];
        for i in 0..n {
            let mut r = vec![0i64; n];
            r[i] = 2;
            relations.push(r);
        }
        let p = NagataPresentation {
            primes: (1..=n).map(|i| format!("I{i}")).collect(),
            relations,
        };
        assert_eq!(
            nagata_class_group(&p),
            FGAbelianGroup::elementary_two(n - 1),
            "Cl(T) for n = {n}"
        );
    }
    criterion(1, "Cl(T) = (Z/2)^(n-1) for odd n in 3..=11");
}

/// Intersection data of the exceptional fiber: determinant and cokernel.
#[test]
fn criterion_02_intersection_data() {
    for n in [3usize, 5, 7, 9] {
        let data = intersection_data(n).unwrap();
        assert_eq!(
            data.abs_det,
            (1u64 << (n - 1)).to_string(),
            "determinant for n = {n}"
        );
        assert_eq!(
            data.cokernel,
            FGAbelianGroup::elementary_two(n - 1),
            "cokernel for n = {n}"
        );
    }
    criterion(2, "|det (E_i.E_j)| = 2^(n-1) and cokernel (Z/2)^(n-1)");
}

/// Cycle rank of the concurrent-line graph and the span of the pair symbols.
#[test]
fn criterion_03_cycle_rank_and_span() {
    for n in 3..=10usize {
        let graph = build_line_graph(&concurrent_lines(n), true).unwrap();
        let (rank, comps) = graph.cycle_rank();
        assert_eq!(comps, 1);
        assert_eq!(rank, n as i64 - 1, "cycle rank for n = {n}");
        let mut classes = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                let a = line_function_divisor(&[(format!("F{i}"), 1)]);
                let b = line_function_divisor(&[(format!("F{j}"), 1)]);
                classes.push(graph.symbol_class(&a, &b, 2).unwrap());
            }
        }
        assert_eq!(
            graph.class_span(&classes, 2),
            FGAbelianGroup::elementary_two(n - 1),
            "symbol span for n = {n}"
        );
    }
    criterion(3, "r = e - (n+1+s) + 1 = n - 1 and symbols span H_1(Gamma, Z/2)");
}

/// The image of the crossed-product map, as cycle-coordinate identities.
#[test]
fn criterion_04_crossed_product_image() {
    // odd: the (f_i, f)_2 classes span everything, via the product identity
    for n in [3usize, 5, 7, 9, 11] {
        let graph = build_line_graph(&concurrent_lines(n), true).unwrap();
        let f_div =
            line_function_divisor(&(1..=n).map(|i| (format!("F{i}"), 1)).collect::<Vec<_>>());
        let smile: Vec<_> = (1..=n)
            .map(|i| {
                let a = line_function_divisor(&[(format!("F{i}"), 1)]);
                graph.symbol_class(&a, &f_div, 2).unwrap()
            })
            .collect();
        assert_eq!(
            graph.class_span(&smile, 2),
            FGAbelianGroup::elementary_two(n - 1),
            "full image for odd n = {n}"
        );
        let a12 = line_function_divisor(&[("F1".to_string(), 1), ("F2".to_string(), 1)]);
        let lhs = graph.symbol_class(&a12, &f_div, 2).unwrap();
        let a1 = line_function_divisor(&[("F1".to_string(), 1)]);
        let b2 = line_function_divisor(&[("F2".to_string(), 1)]);
        let rhs = graph.symbol_class(&a1, &b2, 2).unwrap();
        assert_eq!(lhs, rhs, "(f1 f2, f)_2 = (f1, f2)_2 for n = {n}");
    }
    // even: each (f_i, f)_2 equals the product of the consecutive pairs
    for n in [4usize, 6, 8] {
        let graph = build_line_graph(&concurrent_lines(n), true).unwrap();
        let f_div =
            line_function_divisor(&(1..=n).map(|i| (format!("F{i}"), 1)).collect::<Vec<_>>());
        let mut product: Option<Vec<u64>> = None;
        for k in 0..n / 2 {
            let a = line_function_divisor(&[(format!("F{}", 2 * k + 1), 1)]);
            let b = line_function_divisor(&[(format!("F{}", 2 * k + 2), 1)]);
            let c = graph.symbol_class(&a, &b, 2).unwrap();
            product = Some(match product {
                None => c.coords,
                Some(prev) => prev
                    .iter()
                    .zip(&c.coords)
                    .map(|(x, y)| (x + y) % 2)
                    .collect(),
            });
        }
        let product = product.unwrap();
        let mut smile = Vec::new();
        for i in 1..=n {
            let a = line_function_divisor(&[(format!("F{i}"), 1)]);
            let c = graph.symbol_class(&a, &f_div, 2).unwrap();
            assert_eq!(
                c.coords, product,
                "(f{i}, f)_2 equals the pair product for n = {n}"
            );
            smile.push(c);
        }
        let span = graph.class_span(&smile, 2);
        assert_eq!(span, FGAbelianGroup::cyclic(2), "image has order 2, n = {n}");
    }
    criterion(4, "B-smile(S/R): (Z/2)^(n-1) for odd n, order 2 for even n");
}

/// Even-line class group functors and the divisible Picard cohomology.
#[test]
fn criterion_05_even_case_functors() {
    for n in [4usize, 6, 8] {
        let ClassGroupDescriptor::Extension { functors, .. } =
            cl_even_case_descriptor(n).unwrap()
        else {
            panic!("even case must be the extension kind")
        };
        assert_eq!(
            functors.two_torsion,
            FGAbelianGroup::elementary_two(n - 1),
            "2-torsion of Cl(T), n = {n}"
        );
        assert_eq!(
            functors.tensor_two,
            FGAbelianGroup::cyclic(2),
            "Cl(T) x Z/2, n = {n}"
        );
        let pic = pic_s_even_case(n).unwrap();
        assert_eq!(
            pic.h_even,
            FGAbelianGroup::elementary_two(n - 2),
            "H^even(G, Pic S), n = {n}"
        );
        assert!(pic.h_odd.is_trivial(), "H^odd(G, Pic S), n = {n}");
    }
    criterion(5, "2Cl = (Z/2)^(n-1), Cl x Z/2 = Z/2, H^*(G, Pic S) for even n");
}

/// Cl(T) over the spec matrix of branch multiplicities.
#[test]
fn criterion_06_hyperelliptic_class_groups() {
    for mults in SPEC_MATRIX {
        let spec = spec_of(mults);
        let d = spec.gcd_mult();
        let v = spec.v();
        let expect = FGAbelianGroup::from_orders(&[num::BigInt::from(d)])
            .direct_sum(&FGAbelianGroup::free(v - 1));
        let got = cl_hyperelliptic_doubleplane(&spec);
        assert_eq!(
            got.group().unwrap(),
            &expect,
            "Cl(T) for multiplicities {mults:?} (D = {d})"
        );
    }
    criterion(6, "Cl(T) = Z/D + Z^(v-1) over the spec matrix");
}

/// Picard groups over the same matrix.
#[test]
fn criterion_07_picard_groups() {
    for mults in SPEC_MATRIX {
        let spec = spec_of(mults);
        let v = spec.v();
        let d = spec.gcd_mult();
        let pic = pic_t(&spec).unwrap();
        assert!(pic.group.torsion().is_empty(), "Pic(T) free, {mults:?}");
        assert_eq!(pic.group.rank(), v - 1, "Pic(T) rank, {mults:?}");
        let ps = pic_s(&spec);
        let expect = if d.is_multiple_of(2) {
            FGAbelianGroup::from_orders(&[num::BigInt::from(d / 2)])
                .direct_sum(&FGAbelianGroup::free(v - 1))
        } else {
            FGAbelianGroup::from_orders(&[num::BigInt::from(d)])
                .direct_sum(&FGAbelianGroup::free(v - 1))
        };
        assert_eq!(ps, expect, "Pic(S) for {mults:?}");
    }
    criterion(7, "Pic(T) free of rank v-1 and Pic(S) by the parity of D");
}

/// The relative Brauer group is H^1(G, Cl(T)) on every scenario in scope.
#[test]
fn criterion_08_relative_brauer() {
    for n in [3usize, 5, 7, 9, 11] {
        let report = run_lines_scenario(&concurrent_coeffs(n), &[2]).unwrap();
        let check = report
            .checks
            .iter()
            .find(|c| c.name.contains("H^1(G, Cl(T))"))
            .expect("relative brauer check present");
        assert!(check.pass, "odd lines n = {n}: {}", check.detail);
    }
    for n in [4usize, 6, 8] {
        let report = run_lines_scenario(&concurrent_coeffs(n), &[2]).unwrap();
        let check = report
            .checks
            .iter()
            .find(|c| c.name.contains("H^1(G, Cl(T))"))
            .expect("relative brauer check present");
        assert!(check.pass, "even lines n = {n}: {}", check.detail);
    }
    for mults in SPEC_MATRIX {
        let report = run_hyperelliptic_scenario(&spec_of(mults), &[2]).unwrap();
        let check = report
            .checks
            .iter()
            .find(|c| c.name.contains("H^1(G, Cl(T))"))
            .expect("relative brauer check present");
        assert!(check.pass, "spec {mults:?}: {}", check.detail);
    }
    criterion(8, "H^1(G, Cl(T)) = B(S/R) on the line and branch scenario families");
}

/// Order of the crossed-product image generator by D mod 4, via the cycle.
#[test]
fn criterion_09_b_smile_order() {
    for (mults, expect) in [
        (vec![2u64, 4], 2u64), // D = 2
        (vec![4, 8], 1),       // D = 4
        (vec![6], 2),          // D = 6
        (vec![8], 1),          // D = 8
    ] {
        let spec = spec_of(&mults);
        let d = spec.gcd_mult();
        let (graph, _) = hyperelliptic_branch_graph(&spec).unwrap();
        let m = (spec.degree() / 2) as i64;
        let a = CurveDivisor::new().with("F1", 1).with("F0", -m);
        let b = CurveDivisor::new().with("F2", 1).with("F0", -m);
        let class = graph.symbol_class(&a, &b, 2).unwrap();
        assert_eq!(class.order(), expect, "(f1,f2)_2 order for D = {d}");
        assert_eq!(expect == 2, d % 4 == 2, "order-2 exactly when D = 2 mod 4");
    }
    criterion(9, "B-smile(S/R) has order 2 iff D = 2 mod 4, via the cycle order");
}

/// Multiplication table of Delta(I_i) and its associativity.
#[test]
fn criterion_10_crossed_product_table() {
    let specs = [
        HyperellipticSpec::from_poly(&parse_poly("(x-1)^2").unwrap()).unwrap(),
        HyperellipticSpec::from_poly(&parse_poly("(x-1)^2*(x-2)^4").unwrap()).unwrap(),
        HyperellipticSpec::from_poly(&parse_poly("(x-1)*(x-2)^2*(x-3)^3").unwrap()).unwrap(),
    ];
    for spec in &specs {
        for i in 1..=spec.v() {
            let alg = CrossedAlgebra::new(spec.clone(), i).unwrap();
            let cells = alg.verify_table();
            assert_eq!(cells.len(), 16);
            let verbatim = cells.iter().filter(|c| c.matches_published).count();
            assert!(verbatim >= 14, "verbatim matches = {verbatim}");
            assert!(
                cells.iter().all(|c| c.oracle_match),
                "every cell agrees with the ring oracle"
            );
            let flagged: Vec<_> = cells.iter().filter(|c| !c.matches_published).collect();
            assert_eq!(flagged.len(), 2, "exactly the two flagged cells");
            assert!(flagged.iter().all(|c| c.note.is_some() && c.oracle_match));
            let assoc = alg.associativity_sample(100, 0xacce97).unwrap();
            assert_eq!(assoc.triples_checked, 64 + 100, "exhaustive basis + 100 random");
        }
    }
    criterion(10, "table verified on 3 specs; 14 verbatim + 2 oracle-confirmed cells");
}

/// Hyperelliptic two-torsion ranks and the quadratic-cover split test.
#[test]
fn criterion_11_two_torsion_and_covers() {
    for n in 3..=8usize {
        let expect = if n % 2 == 0 { n - 2 } else { n - 1 };
        assert_eq!(
            hyperelliptic_two_torsion(n).unwrap().group,
            FGAbelianGroup::elementary_two(expect),
            "two-torsion rank for n = {n}"
        );
        let covers = quadratic_covers(n).unwrap();
        assert_eq!(
            covers.split_vectors,
            vec![vec![0u8; n], vec![1u8; n]],
            "exactly the two constant vectors split for n = {n}"
        );
        assert!(cover_is_split(&vec![1; n]));
        if n >= 2 {
            let mut mixed = vec![0u8; n];
            mixed[0] = 1;
            assert!(!cover_is_split(&mixed));
        }
    }
    criterion(11, "2-torsion ranks n-2 / n-1 and the split test for n in 3..=8");
}

/// The Chase-Harrison-Rosenberg order identity on every scenario in scope.
#[test]
fn criterion_12_chr_order_identity() {
    for n in [3usize, 5, 7, 9, 11, 4, 6, 8] {
        let report = run_lines_scenario(&concurrent_coeffs(n), &[2]).unwrap();
        let check = report
            .checks
            .iter()
            .find(|c| c.name == "chr-order-identity")
            .expect("chr check present");
        assert!(check.pass, "lines n = {n}: {}", check.detail);
    }
    for mults in SPEC_MATRIX {
        let report = run_hyperelliptic_scenario(&spec_of(mults), &[2]).unwrap();
        let check = report
            .checks
            .iter()
            .find(|c| c.name == "chr-order-identity")
            .expect("chr check present");
        assert!(check.pass, "spec {mults:?}: {}", check.detail);
    }
    criterion(12, "|Pic(S)^G| |B(S/R)| = |H^2(G,S*)| |H^1(G,Pic S)| everywhere");
}

/// Tame-symbol orders on the resolution chart.
#[test]
fn criterion_13_tame_symbol_orders() {
    // Spec(T~): primes I = (v,w) and J = (x); Div(x) = J, Div(v) = 2I
    let mut main = DivisorTable::new();
    main.add_prime(PrimeDivisor::new("I", vec![Poly::var(Var::Y), Poly::var(Var::Z)]))
        .unwrap();
    main.add_prime(PrimeDivisor::new("J", vec![Poly::var(Var::X)]))
        .unwrap();
    main.add_element("x", &[0, 1]).unwrap();
    main.add_element("v", &[2, 0]).unwrap();
    // residue curve at I: the affine x-line, Div(x) = (x)
    let mut at_i = DivisorTable::new();
    at_i.add_prime(PrimeDivisor::new("(x)", vec![Poly::var(Var::X)]))
        .unwrap();
    at_i.add_element("x", &[1]).unwrap();
    // residue curve at J: the hyperelliptic curve, Div(v) = 2 P2 with P2
    // non-principal 2-torsion
    let mut at_j = DivisorTable::new();
    at_j.add_prime(PrimeDivisor::new("P2", vec![Poly::var(Var::Y)]))
        .unwrap();
    at_j.add_element("v", &[2]).unwrap();

    let alpha = MonomialElem::gen("x");
    let beta = MonomialElem::gen("v");
    for m in [2u64, 3, 4, 6] {
        let at_exceptional = tame_symbol(&main, &alpha, &beta, "I", m, &at_i).unwrap();
        assert_eq!(
            at_exceptional.order,
            m / num::integer::gcd(m, 2),
            "order at I for m = {m}"
        );
        assert_eq!(at_exceptional.residue, MonomialElem::gen("x").pow(2));
        let at_section = tame_symbol(&main, &alpha, &beta, "J", m, &at_j).unwrap();
        assert_eq!(at_section.order, m, "order at J for m = {m}");
        assert_eq!(at_section.residue, MonomialElem::gen("v").pow(-1));
    }
    criterion(13, "tame symbols give orders m/gcd(m,2) and m for m in {2,3,4,6}");
}
