use clap::{Args, ValueEnum};
use dtcode::code::DEFAULT_BUDGET;
use dtcode::search::{count_containing, Reduction, SearchSpace, Shard};
use dtcode::stream::SeedStream;
use dtcode::{reversal_permutation, DTCode, Error, FVector, FieldElement, FieldSpec, ToeplitzGen};

use crate::{field, CliResult, Failure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Property {
    /// `A Q = Q A^T` for the reversal permutation `Q`.
    Isodual,
    /// The code and its dual have the same weight distribution.
    Fsd,
    /// Self-dual codes are circulant or negacirculant.
    SelfdualStructure,
    /// Even binary codes have a circulant block.
    EvenCirculant,
    /// At most `q^n` generators contain a given `(u, v)`, `q^(n-1)` when `v = 0`.
    ContainmentCap,
    /// The generator space has exactly `q^(2n-1)` members.
    CodeCount,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    property: Property,
    #[arg(long)]
    q: u32,
    /// Largest block size checked; every size from 1 up is covered.
    #[arg(long)]
    n: usize,
    /// Check every generator (the default).
    #[arg(long, conflicts_with = "random")]
    exhaustive: bool,
    /// Check this many random generators instead.
    #[arg(long)]
    random: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Cap on the number of generators visited exhaustively.
    #[arg(long, default_value_t = 1 << 26)]
    budget: u64,
}

fn check(property: Property, gen: &ToeplitzGen) -> CliResult<Option<String>> {
    let code = DTCode::new(gen.clone());
    let verdict = match property {
        Property::Isodual => {
            let a = gen.matrix();
            let q = reversal_permutation(gen.field(), gen.n());
            (a.mul(&q)? != q.mul(&a.transpose())?).then(|| "A Q != Q A^T".to_string())
        }
        Property::Fsd => {
            let wd = code.weight_distribution(DEFAULT_BUDGET)?;
            let dual = code.dual_weight_distribution(DEFAULT_BUDGET)?;
            (wd != dual).then(|| format!("{:?} vs dual {:?}", wd.counts, dual.counts))
        }
        Property::SelfdualStructure => match code.classify_self_dual_structure() {
            Ok(_) => None,
            Err(Error::InvariantViolation(m)) => Some(m),
            Err(e) => return Err(e.into()),
        },
        Property::EvenCirculant => {
            (code.is_even()? && !gen.is_circulant()).then(|| "even but not circulant".into())
        }
        Property::ContainmentCap | Property::CodeCount => unreachable!("not a per-code property"),
    };
    Ok(verdict)
}

fn random_generator(f: FieldSpec, max_n: usize, stream: &SeedStream, trial: u64) -> ToeplitzGen {
    let mut lane = stream.lane(trial);
    let n = 1 + lane.below(max_n as u64) as usize;
    let flat: Vec<FieldElement> = (0..2 * n - 1)
        .map(|_| FieldElement(lane.below(f.q() as u64) as u8))
        .collect();
    ToeplitzGen::from_flat(f, &flat).expect("valid tuple")
}

fn all_vectors(f: FieldSpec, n: usize) -> Vec<FVector> {
    let q = f.q() as usize;
    (0..q.pow(n as u32))
        .map(|mut idx| {
            let mut v = vec![0u32; n];
            for slot in v.iter_mut().rev() {
                *slot = (idx % q) as u32;
                idx /= q;
            }
            FVector::from_values(f, &v).expect("valid vector")
        })
        .collect()
}

fn space_size(f: FieldSpec, max_n: usize) -> u128 {
    (1..=max_n)
        .map(|n| (f.q() as u128).saturating_pow(2 * n as u32 - 1))
        .fold(0u128, u128::saturating_add)
}

fn counting(property: Property, f: FieldSpec, max_n: usize) -> CliResult<u64> {
    let q = f.q() as u64;
    let mut checked = 0;
    for n in 1..=max_n {
        let space = SearchSpace::new(f, n, Reduction::None, Shard::WHOLE)?;
        let expected = q.pow(2 * n as u32 - 1);
        match property {
            Property::CodeCount => {
                let got = space.len()?;
                if got != expected {
                    return Err(Failure::violation(format!(
                        "n={n}: {got} generators, expected {expected}"
                    )));
                }
                checked += got;
            }
            _ => {
                for u in all_vectors(f, n).into_iter().filter(|u| !u.is_zero()) {
                    for v in all_vectors(f, n) {
                        let c = count_containing(f, n, &u, &v)?;
                        let cap = if v.is_zero() {
                            q.pow(n as u32 - 1)
                        } else {
                            q.pow(n as u32)
                        };
                        if c > cap {
                            return Err(Failure::violation(format!(
                                "counterexample: n={n} u={} v={}: {c} generators > {cap}",
                                u.to_text(),
                                v.to_text()
                            )));
                        }
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(checked)
}

pub fn run(args: VerifyArgs) -> CliResult {
    let f = field(args.q)?;
    if args.n == 0 {
        return Err(Failure::usage("--n must be positive"));
    }
    if args.property == Property::EvenCirculant && args.q != 2 {
        return Err(Failure::usage(
            "even-circulant is a binary property; use --q 2",
        ));
    }
    let name = args
        .property
        .to_possible_value()
        .expect("named")
        .get_name()
        .to_string();
    let counting_property = matches!(
        args.property,
        Property::ContainmentCap | Property::CodeCount
    );
    if counting_property && args.random.is_some() {
        return Err(Failure::usage(format!(
            "{name} is checked exhaustively only"
        )));
    }
    let size = space_size(f, args.n);
    if args.random.is_none() && size > args.budget as u128 {
        return Err(Failure::new(
            crate::EXIT_BUDGET,
            format!(
                "{size} generators exceed the budget of {}; use --random",
                args.budget
            ),
        ));
    }
    let (checked, mode) = if counting_property {
        (
            counting(args.property, f, args.n)?,
            "exhaustive".to_string(),
        )
    } else if let Some(trials) = args.random {
        let stream = SeedStream::new(args.seed);
        for trial in 0..trials {
            let gen = random_generator(f, args.n, &stream, trial);
            if let Some(why) = check(args.property, &gen)? {
                return Err(Failure::violation(format!(
                    "{name} fails at trial {trial}: {gen} ({why})"
                )));
            }
        }
        (trials, format!("random seed={}", args.seed))
    } else {
        let mut checked = 0;
        for n in 1..=args.n {
            // lexicographic order by size, so the first failure is the smallest counterexample
            for gen in SearchSpace::new(f, n, Reduction::None, Shard::WHOLE)?.iter()? {
                if let Some(why) = check(args.property, &gen)? {
                    return Err(Failure::violation(format!("{name} fails: {gen} ({why})")));
                }
                checked += 1;
            }
        }
        (checked, "exhaustive".to_string())
    };
    println!(
        "pass: {name} q={} n<={} checked={checked} mode={mode}",
        args.q, args.n
    );
    Ok(())
}
