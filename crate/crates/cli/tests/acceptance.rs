//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always show up in the test output.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use dragon_core::counting::quotient::quotient_report;
use dragon_core::counting::sequences::{
    arrays_recurrence, binary_recurrence, left_gf, left_recurrence, right_gf, right_recurrence, ArrayRoute,
};
use dragon_core::counting::{
    char_poly, gf_expand, kernel_check, left_sequence, left_weighted_count, quotient_diagram_check, rec_eval,
    right_count, symmetry_check, BigVector, MatrixSet, Polynomial, Sequence,
};
use dragon_core::enumeration::{count_a, count_s_matrix, enumerate_a, enumerate_s, partition_check};
use dragon_core::lsystem::{boundary_full, boundary_left, boundary_right};
use dragon_core::polyomino::TracedBoundary;
use dragon_core::verify::alignment_offsets;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(err: dragon_core::Error) -> String {
    err.to_string()
}

fn left_boundary_sequence() -> Outcome {
    let coeffs = gf_expand(&left_gf(), 200).map_err(e)?;
    let known: Vec<BigInt> = [2, 4, 8, 16, 28, 48, 84].into_iter().map(big).collect();
    ensure(coeffs[..7] == known[..], || format!("prefix {:?}", &coeffs[..7]))?;
    let rec = left_recurrence();
    for n in 0..=200u64 {
        let c = &coeffs[n as usize];
        if n >= 4 {
            ensure(rec_eval(&rec, n).map_err(e)? == *c, || {
                format!("recurrence differs at n={n}")
            })?;
        }
        ensure(left_weighted_count(n + 1) == *c, || {
            format!("weighted count differs at n={n}")
        })?;
        ensure(left_sequence(n) == *c, || format!("left_sequence differs at n={n}"))?;
    }
    Ok("2,4,8,16,28,48,84; gf = recurrence (n=4..200) = weighted count (n=0..200)".into())
}

fn right_boundary_sequence() -> Outcome {
    let first: Vec<BigInt> = (0..6).map(right_count).collect();
    ensure(first == [1, 1, 2, 4, 6, 10].map(big), || format!("prefix {first:?}"))?;
    let terms: Vec<BigInt> = (0..=200).map(right_count).collect();
    ensure(right_recurrence().holds_on(&terms, 0, 3), || {
        "a(n) = a(n-1) + 2a(n-3) fails".into()
    })?;
    let taylor = gf_expand(&right_gf(), 201).map_err(e)?;
    ensure(taylor[7] == big(18), || format!("x^7 coefficient {}", taylor[7]))?;
    ensure(taylor[1..] == terms[..], || {
        "Taylor coefficients do not shift onto the counts".into()
    })?;
    Ok("1,1,2,4,6,10; recurrence n=3..200; x^7 coefficient 18".into())
}

fn geometric_oracle() -> Outcome {
    let start = Instant::now();
    let (full, left, right) = (boundary_full(), boundary_left(), boundary_right());
    for n in 0..=14 {
        let t = TracedBoundary::of_iterate(n).map_err(e)?;
        ensure(t.full.word == full.iterate(n), || format!("full word differs at n={n}"))?;
        ensure(t.full.parities_consistent(), || format!("parities differ at n={n}"))?;
        if n >= 1 {
            ensure(t.left.word == left.iterate(n), || format!("left word differs at n={n}"))?;
            ensure(t.right.word == right.iterate(n), || {
                format!("right word differs at n={n}")
            })?;
        }
        ensure(t.cycle.is_simple(), || format!("cycle not simple at n={n}"))?;
        ensure(t.cells.is_simply_connected(), || {
            format!("cells not simply connected at n={n}")
        })?;
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(10), || format!("took {took:?}"))?;
    Ok(format!("n=0..14 in {} ms", took.as_millis()))
}

fn enumeration_oracles() -> Outcome {
    let c = binary_recurrence();
    for n in 1..=20usize {
        let brute = big(enumerate_s(n).map_err(e)?.len() as i64);
        let m = count_s_matrix(n as u64);
        let r = rec_eval(&c, n as u64).map_err(e)?;
        ensure(brute == m && m == r, || format!("strings n={n}: {brute} {m} {r}"))?;
    }
    let c15: Vec<BigInt> = (1..=5).map(count_s_matrix).collect();
    ensure(c15 == [1, 2, 4, 6, 10].map(big), || format!("c1..c5 {c15:?}"))?;
    let d = arrays_recurrence();
    for n in 1..=14usize {
        let brute = big(enumerate_a(n).map_err(e)?.len() as i64);
        let via_n = count_a(n as u64, ArrayRoute::RowTypes);
        let via_p = count_a(n as u64, ArrayRoute::Groups);
        let r = rec_eval(&d, n as u64).map_err(e)?;
        ensure(brute == via_n && via_n == via_p && via_p == r, || {
            format!("arrays n={n}")
        })?;
    }
    let d15: Vec<BigInt> = (1..=5).map(|n| count_a(n, ArrayRoute::RowTypes)).collect();
    ensure(d15 == [1, 1, 2, 4, 6].map(big), || format!("d1..d5 {d15:?}"))?;
    for n in 1..=15 {
        ensure(partition_check(n).map_err(e)?, || format!("partition fails at n={n}"))?;
    }
    Ok("strings n=1..20, arrays n=1..14, partition n=1..15".into())
}

fn matrix_identities() -> Outcome {
    let set = MatrixSet::standard();
    let cubic = Polynomial::from_i64s(&[-2, 0, -1, 1]);
    let expect = [
        ("M", &set.boundary, Polynomial::from_i64s(&[0, 2, -2, 1, -2, 1])),
        ("K", &set.binary_types, Polynomial::from_i64s(&[0, 0, 1]).mul(&cubic)),
        (
            "N",
            &set.array_rows,
            Polynomial::product([&Polynomial::x(), &cubic, &Polynomial::from_i64s(&[-1, 0, 1, 1])]),
        ),
        ("P", &set.array_groups, cubic.clone()),
    ];
    for (name, m, p) in expect {
        let got = char_poly(m).map_err(e)?;
        ensure(got == p, || format!("char poly of {name} is {got}"))?;
    }
    ensure(symmetry_check(), || "PMP != M".into())?;
    let kernel = kernel_check(&set.boundary, &cubic, &BigVector::from_i64s(&[0, 1, 1, 0, 0])).map_err(e)?;
    ensure(kernel, || "(0,1,1,0,0) not in the kernel".into())?;
    let q = quotient_report(&set);
    ensure(quotient_diagram_check() && q.all(), || format!("{q:?}"))?;
    Ok("char polys of M, K, N, P; PMP = M; kernel; VU = I, P = VNU, Q = VR, T = SV, PV = VN".into())
}

fn count_alignment() -> Outcome {
    let set = MatrixSet::standard();
    let off = alignment_offsets(&set, 14, 14).map_err(e)?;
    let (s, t, a) = off.unique().ok_or_else(|| format!("offsets not unique: {off:?}"))?;
    ensure((s, t, a) == (0, 1, 1), || format!("offsets {off:?}"))?;
    let taylor = gf_expand(&right_gf(), 202).map_err(e)?;
    for n in 1..=14usize {
        let r = right_count(n as u64);
        let c = big(enumerate_s(n).map_err(e)?.len() as i64);
        ensure(r == c && r == taylor[n + 1], || format!("n={n}"))?;
        if n < 14 {
            let d = big(enumerate_a(n + 1).map_err(e)?.len() as i64);
            ensure(r == d, || format!("arrays n={n}"))?;
        }
    }
    for n in 1..=200u64 {
        let r = right_count(n);
        let ok = r == count_s_matrix(n)
            && r == taylor[n as usize + 1]
            && r == count_a(n + 1, ArrayRoute::RowTypes)
            && r == count_a(n + 1, ArrayRoute::Groups);
        ensure(ok, || format!("matrices disagree at n={n}"))?;
    }
    Ok("right(n) = c(n) = [x^(n+1)] = d(n+1); offsets found by search (strings 0, taylor +1, arrays +1)".into())
}

fn dragon(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_dragon"))
        .args(args)
        .output()
        .map_err(|err| err.to_string())?;
    ensure(out.status.success(), || {
        format!(
            "{args:?} exited {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        )
    })?;
    Ok(out.stdout)
}

fn performance() -> Outcome {
    let start = Instant::now();
    let out = dragon(&["count", "--sequence", "left", "--n", "100000"])?;
    let took = start.elapsed();
    let text = String::from_utf8(out).map_err(|err| err.to_string())?;
    let printed: BigInt = text.trim().parse().map_err(|_| "unparsable output".to_string())?;
    let by_matrix = Sequence::Left.by_matrix(100_000).map_err(e)?;
    let by_rec = Sequence::Left.by_recurrence(100_000).map_err(e)?;
    ensure(printed == by_matrix && by_matrix == by_rec, || "routes disagree".into())?;
    ensure(took < Duration::from_secs(10), || format!("took {took:?}"))?;
    Ok(format!("{} digits in {} ms", text.trim().len(), took.as_millis()))
}

fn determinism() -> Outcome {
    let runs: [&[&str]; 7] = [
        &["curve", "--n", "10"],
        &["curve", "--n", "8", "--format", "json"],
        &["boundary", "--n", "9", "--format", "svg"],
        &["boundary", "--n", "12", "--side", "left"],
        &["boundary", "--n", "7", "--side", "right", "--format", "json"],
        &["count", "--sequence", "right", "--n", "300", "--bfile"],
        &["count", "--sequence", "full", "--n", "5000"],
    ];
    for args in runs {
        let first = dragon(args)?;
        let second = dragon(args)?;
        ensure(!first.is_empty() && first == second, || {
            format!("{args:?} differs between runs")
        })?;
    }
    Ok(format!("{} invocations byte-identical", runs.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 left boundary sequence", left_boundary_sequence),
        ("2 right boundary sequence", right_boundary_sequence),
        ("3 geometric oracle", geometric_oracle),
        ("4 enumeration oracles", enumeration_oracles),
        ("5 matrix identities", matrix_identities),
        ("6 count alignment", count_alignment),
        ("7 performance", performance),
        ("8 determinism", determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
