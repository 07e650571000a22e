mod report;

use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use cremona::cumulants::{
    l_cumulant_map, linearization_check, multi_linearization_check, multi_segre_cumulant_map, subset_name, tuple_name,
    MultiIndexCoordinates, SubsetCoordinates,
};
use cremona::gallery::{run_example, Example, ExampleOptions};
use cremona::maps::CremonaPair;
use cremona::polycore::{Limits, RankConfig, Ring};
use cremona::posets::{mobius_sum_check, PosetKind};
use cremona::varieties::{
    catalog_entry, image_dimension, secant_defect, secant_parametrization, tangential_parametrization, CatalogEntry,
    Family, Parametrization,
};

use report::Report;

#[derive(Parser, Debug)]
#[command(name = "cremona", version, about = "Cremona transformations that linearize rational varieties")]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for probabilistic rank estimates.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Raise the total-degree cap of the polynomial kernel.
    #[arg(long, global = true)]
    max_degree: Option<u32>,
    /// Raise the variable-count cap of the polynomial kernel.
    #[arg(long, global = true)]
    max_vars: Option<usize>,
    /// Append wall-clock time to the report (breaks byte-identical output).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List catalog entries, optionally restricted to one family or entry.
    Catalog { filter: Option<String> },
    /// Build and verify the linearizing Cremona pair of an entry.
    Linearize {
        entry: String,
        /// `triangular` or `cumulant:<poset>` (segre-multi entries only).
        #[arg(default_value = "triangular")]
        method: String,
    },
    /// Reproduce one of the worked examples.
    VerifyExample {
        name: String,
        /// Number of factors for ex-secant-toric.
        #[arg(long, default_value_t = 4)]
        n: u32,
    },
    /// Print a partition poset on [n] with its Möbius values.
    Poset {
        kind: String,
        n: u32,
        #[arg(long)]
        check_mobius_sum: bool,
    },
    /// Build the cumulant Cremona of (P¹)ⁿ for a partition poset.
    Cumulant {
        n: u32,
        #[arg(long, default_value = "full")]
        poset: String,
    },
    /// Dimension of a secant variety and its image under the linearizing map.
    Secant {
        entry: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Print the transformed coordinates.
        #[arg(long)]
        coords: bool,
    },
    /// Dimension of the tangential variety and its image.
    Tangent {
        entry: String,
        #[arg(long)]
        coords: bool,
    },
    /// Secant defect: expected minus actual dimension.
    Defect {
        entry: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                print!("{}", report.to_text());
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn make_ring(cli: &Cli) -> Ring {
    let mut limits = Limits::default();
    if let Some(d) = cli.max_degree {
        eprintln!("WARNING: degree cap raised from {} to {d}; computations may exhaust time or memory", limits.max_degree);
        limits.max_degree = d;
    }
    if let Some(v) = cli.max_vars {
        eprintln!("WARNING: variable cap raised from {} to {v}; computations may exhaust time or memory", limits.max_vars);
        limits.max_vars = v;
    }
    Ring::with_limits(limits)
}

fn run(cli: &Cli) -> Result<Report> {
    let ring = make_ring(cli);
    let rank = RankConfig::with_seed(cli.seed);
    let start = Instant::now();
    let mut r = Report::new(std::env::args().skip(1).collect::<Vec<_>>().join(" "));
    match &cli.command {
        Command::Catalog { filter } => catalog(&ring, filter.as_deref(), &mut r)?,
        Command::Linearize { entry, method } => linearize(&ring, entry, method, &mut r)?,
        Command::VerifyExample { name, n } => {
            let example: Example = name.parse()?;
            let rep = run_example(&ring, example, &ExampleOptions { n: *n, rank })?;
            for (label, value) in rep.artifacts {
                r.artifact(label, value);
            }
            for c in rep.checks {
                r.check(c.label, c.passed, c.detail);
            }
        }
        Command::Poset { kind, n, check_mobius_sum } => poset(kind, *n, *check_mobius_sum, &mut r)?,
        Command::Cumulant { n, poset } => {
            let kind: PosetKind = poset.parse()?;
            let pair = l_cumulant_map(&ring, &kind.build(*n)?)?;
            let y = SubsetCoordinates::new(&ring, *n, "y")?;
            let image: Vec<String> = y.order().iter().filter(|s| s.count_ones() >= 2).map(|&s| subset_name("y", s)).collect();
            show_pair(&pair, &mut r);
            r.artifact("linear image", format!("{} = 0", image.join(" = ")));
            r.check("Segre embedding maps into the linear image", linearization_check(&ring, &pair)?, "");
        }
        Command::Secant { entry, k, coords } => {
            let e = catalog_entry(&ring, entry)?;
            let sec = secant_parametrization(&e.param, *k)?;
            image_report(&e, &sec, &format!("Sec_{k}"), *coords, &rank, &mut r)?;
        }
        Command::Tangent { entry, coords } => {
            let e = catalog_entry(&ring, entry)?;
            let tan = tangential_parametrization(&e.param)?;
            image_report(&e, &tan, "tangential variety", *coords, &rank, &mut r)?;
        }
        Command::Defect { entry, k } => {
            let e = catalog_entry(&ring, entry)?;
            let d = secant_defect(&e, *k, &rank)?;
            r.artifact("ambient dimension", e.ambient_dim());
            r.artifact("variety dimension", e.dim());
            r.artifact("expected dimension", d.expected);
            r.artifact(format!("dim Sec_{k} (generic rank, probabilistic)"), d.dimension);
            r.artifact("defect", d.defect);
        }
    }
    if cli.timing {
        r.set_timing(start.elapsed());
    }
    Ok(r)
}

fn catalog(ring: &Ring, filter: Option<&str>, r: &mut Report) -> Result<()> {
    let families: Vec<Family> = match filter {
        None => Family::examples(),
        Some(f) => {
            let by_kind: Vec<Family> = Family::examples().into_iter().filter(|fam| fam.kind() == f).collect();
            if by_kind.is_empty() {
                vec![f.parse::<Family>().with_context(|| format!("no catalog family or entry matches `{f}`"))?]
            } else {
                by_kind
            }
        }
    };
    for fam in families {
        let e = fam.build(ring)?;
        r.artifact(
            e.name.clone(),
            format!(
                "dim {}, ambient dim {}, {} equations ({})",
                e.dim(),
                e.ambient_dim(),
                e.equations.len(),
                e.equation_kind
            ),
        );
    }
    Ok(())
}

fn show_pair(pair: &CremonaPair, r: &mut Report) {
    let ring = pair.forward.ring();
    let lines = |m: &cremona::maps::RationalMap| {
        m.target()
            .coords
            .iter()
            .zip(m.coords())
            .map(|(&v, f)| format!("{} = {}", ring.name(v), f))
            .collect::<Vec<_>>()
            .join("\n")
    };
    r.artifact("forward", lines(&pair.forward));
    r.artifact("inverse", lines(&pair.inverse));
    r.artifact("degrees", format!("({}, {})", pair.delta, pair.delta_prime));
    r.artifact("fundamental factor degree", pair.fundamental_degree());
    r.check("inverse composes to the identity", pair.verified, "");
    r.check(
        "deg Φ = δδ′ − 1",
        pair.degree_law_holds(),
        format!("{} = {}·{} − 1", pair.fundamental_degree(), pair.delta, pair.delta_prime),
    );
}

fn linearize(ring: &Ring, entry: &str, method: &str, r: &mut Report) -> Result<()> {
    let e = catalog_entry(ring, entry)?;
    if method == "triangular" {
        let pair = e.linearize()?;
        show_pair(&pair, r);
        let image = pair.forward.apply_to_parametrization(&e.param)?;
        let names: Vec<String> = e.linear_image.iter().map(|&v| ring.name(v)).collect();
        r.artifact("linear image", format!("{} = 0", names.join(" = ")));
        let vanish = e.linear_image.iter().all(|&v| image.coordinate(v).is_some_and(|f| f.is_zero()));
        r.check("variety maps into the linear image", vanish, "");
        r.pair = Some(pair.to_json());
        return Ok(());
    }
    let Some(kind) = method.strip_prefix("cumulant:") else {
        bail!("unknown method `{method}` (expected `triangular` or `cumulant:<poset>`)");
    };
    let kind: PosetKind = kind.parse()?;
    let Family::SegreMulti(shape) = &e.family else {
        bail!("the cumulant method needs a segre-multi entry, not `{}`", e.name);
    };
    if shape.iter().all(|&r| r == 1) {
        let n = shape.len() as u32;
        let pair = l_cumulant_map(ring, &kind.build(n)?)?;
        let y = SubsetCoordinates::new(ring, n, "y")?;
        let image: Vec<String> = y.order().iter().filter(|s| s.count_ones() >= 2).map(|&s| subset_name("y", s)).collect();
        show_pair(&pair, r);
        r.artifact("linear image", format!("{} = 0", image.join(" = ")));
        r.check("variety maps into the linear image", linearization_check(ring, &pair)?, "");
        r.pair = Some(pair.to_json());
    } else {
        if kind != PosetKind::Full {
            bail!("only cumulant:full is defined for factors of dimension above one");
        }
        let pair = multi_segre_cumulant_map(ring, shape)?;
        let y = MultiIndexCoordinates::new(ring, shape, "y")?;
        let image: Vec<String> = y
            .order()
            .iter()
            .filter(|t| MultiIndexCoordinates::support(t).count_ones() >= 2)
            .map(|t| tuple_name("y", t))
            .collect();
        show_pair(&pair, r);
        r.artifact("linear image", format!("{} = 0", image.join(" = ")));
        r.check("variety maps into the linear image", multi_linearization_check(ring, &pair, shape)?, "");
        r.pair = Some(pair.to_json());
    }
    Ok(())
}

fn poset(kind: &str, n: u32, check_sum: bool, r: &mut Report) -> Result<()> {
    let kind: PosetKind = kind.parse()?;
    let p = kind.build(n)?;
    r.artifact("elements", p.len());
    let lines: Vec<String> = p
        .elements()
        .iter()
        .map(|pi| Ok(format!("{pi}  μ(π, 1̂) = {}", p.mobius_to_top(pi)?)))
        .collect::<Result<_>>()?;
    r.artifact("partitions", lines.join("\n"));
    r.artifact("μ(0̂, 1̂)", p.mobius(&p.bottom(), &p.top())?);
    if check_sum {
        if p.len() < 2 {
            r.artifact("μ-sum", "skipped: the poset has a single element");
        } else {
            let sum = mobius_sum_check(p.poset())?;
            r.check("∑ μ(π, 1̂) = 0", sum == 0, format!("sum {sum}"));
        }
    }
    Ok(())
}

fn image_report(
    e: &CatalogEntry,
    param: &Parametrization,
    what: &str,
    coords: bool,
    rank: &RankConfig,
    r: &mut Report,
) -> Result<()> {
    let ring = param.ring();
    r.artifact("ambient dimension", e.ambient_dim());
    r.artifact(format!("dim {what} (generic rank, probabilistic)"), image_dimension(param, rank)?);
    if coords {
        let pair = e.linearize()?;
        let image = pair.forward.apply_to_parametrization(param)?;
        let lines: Vec<String> = e
            .linear_image
            .iter()
            .map(|&v| format!("{} = {}", ring.name(v), image.coordinate(v).expect("target coordinate")))
            .collect();
        r.artifact("transformed coordinates", lines.join("\n"));
    }
    Ok(())
}
