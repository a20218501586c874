//! Command-line frontend: every subcommand maps to one library operation or
//! verification suite, reads and writes JSON, and exits 0 on success, 1 on
//! domain errors, and 2 on verification failure.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use sl3web::cone::satisfies_rhombi;
use sl3web::mutation::{flip_mutation, verify_flip_loop, MutationStep};
use sl3web::square::{
    self, sector_of, solve_cornerless, solve_cornerless_coefficients,
    verify_relations, wall_graph, x_coords, XVector,
};
use sl3web::triangulation::{
    build_once_punctured_torus, build_pentagon_base, build_square, build_triangle,
    pentagon_flip_loop, DottedTriangulation,
};
use sl3web::webs::{
    classify_family, glue_coords, square_inverse,
    triangle_inverse, SquareWebSchematic, WEB_NAMES,
};
use sl3web::{hilbert_basis, is_in_ktgs_cone, ConePoint};

#[derive(Parser)]
#[command(name = "sl3web", about = "Tropical coordinates for SL3 webs on triangulated surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Surface {
    Triangle,
    Square,
    Pentagon,
    Torus,
    File,
}

#[derive(Args)]
struct SurfaceArgs {
    /// Model surface, or `file` together with --triangulation
    #[arg(long, value_enum, default_value = "square")]
    surface: Surface,
    /// Path to a triangulation JSON file (implies --surface file)
    #[arg(long)]
    triangulation: Option<String>,
}

impl SurfaceArgs {
    fn build(&self) -> Result<DottedTriangulation, String> {
        if let Some(path) = &self.triangulation {
            let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
            let v: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| format!("{path}: {e}"))?;
            return DottedTriangulation::from_json(&v).map_err(|e| e.to_string());
        }
        match self.surface {
            Surface::Triangle => Ok(build_triangle()),
            Surface::Square => Ok(build_square()),
            Surface::Pentagon => Ok(build_pentagon_base()),
            Surface::Torus => Ok(build_once_punctured_torus()),
            Surface::File => Err("--surface file requires --triangulation".into()),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Test KTGS cone membership of an integer point
    Member {
        #[command(flatten)]
        surface: SurfaceArgs,
        /// JSON array of integers
        #[arg(long)]
        point: String,
    },
    /// Apply the flip mutation at an interior edge
    Mutate {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long)]
        edge: usize,
        #[arg(long)]
        point: String,
    },
    /// Enumerate the Hilbert basis of the KTGS cone within a bound
    Hilbert {
        #[command(flatten)]
        surface: SurfaceArgs,
        /// Coordinate-sum bound (defaults: 12 for the triangle, 24 for the square)
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Sectors and families containing a square cone point
    Classify {
        #[arg(long)]
        point: String,
    },
    /// Invert the coordinate map (triangle or square)
    Invert {
        #[arg(long, value_enum, default_value = "square")]
        surface: Surface,
        #[arg(long)]
        point: String,
    },
    /// Transport a square schematic across the diagonal flip
    Flipweb {
        /// Schematic JSON ({"faces":{"0":..,"1":..}})
        #[arg(long, conflicts_with = "point")]
        schematic: Option<String>,
        /// Alternatively, a cone point to invert first
        #[arg(long)]
        point: Option<String>,
    },
    /// Scan the X-lattice box |X_i| <= scan for sector coverage
    Sectors {
        #[arg(long, default_value_t = 6)]
        scan: i64,
    },
    /// Emit the 42-sector wall graph
    Walls {
        /// Output format: json or dot
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Solve the cornerless inversion problem for integer X-coordinates
    SolveX {
        /// JSON array of 4 integers
        #[arg(long)]
        x: String,
    },
    /// Verification suites
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
}

#[derive(Subcommand)]
enum VerifySuite {
    /// Five- and thirty-five-flip pentagon loops against their permutations
    Pentagon {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 50)]
        range: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Square naturality and involution on random cone points
    Square {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The ten tropical skein relations and the relation-space dimension
    Relations,
    /// All of the above
    All {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 50)]
        range: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_point(text: &str) -> Result<ConePoint, String> {
    serde_json::from_str(text).map_err(|e| format!("point: {e}"))
}

fn ok(v: serde_json::Value) -> ! {
    println!("{v}");
    std::process::exit(0)
}

fn domain_error(msg: impl std::fmt::Display) -> ! {
    println!("{}", json!({ "error": msg.to_string() }));
    std::process::exit(1)
}

fn verification(v: serde_json::Value, pass: bool) -> ! {
    println!("{v}");
    std::process::exit(if pass { 0 } else { 2 })
}

fn main() {
    let cli = Cli::parse();
    match cli.command {
        Command::Member { surface, point } => {
            let t = surface.build().unwrap_or_else(|e| domain_error(e));
            let c = parse_point(&point).unwrap_or_else(|e| domain_error(e));
            match is_in_ktgs_cone(&c, &t) {
                Ok(in_cone) => ok(json!({ "in_cone": in_cone })),
                Err(e) => domain_error(e),
            }
        }
        Command::Mutate { surface, edge, point } => {
            let t = surface.build().unwrap_or_else(|e| domain_error(e));
            let c = parse_point(&point).unwrap_or_else(|e| domain_error(e));
            if c.len() != t.dot_count() {
                domain_error(format!("point has length {}, expected {}", c.len(), t.dot_count()));
            }
            let step = MutationStep::new(&t, edge).unwrap_or_else(|e| domain_error(e));
            match flip_mutation(&c, &step) {
                Ok(out) => ok(json!({ "point": out.0 })),
                Err(e) => domain_error(e),
            }
        }
        Command::Hilbert { surface, bound } => {
            let t = surface.build().unwrap_or_else(|e| domain_error(e));
            let dim = t.dot_count();
            let bound = bound.unwrap_or(match dim {
                7 => 12,
                12 => 24,
                _ => domain_error("no default bound for this surface; pass --bound"),
            });
            let rhombi = sl3web::cone::rhombi(&t).unwrap_or_else(|e| domain_error(e));
            match hilbert_basis(|p| satisfies_rhombi(p, &rhombi), dim, bound) {
                Ok(hb) => ok(json!({
                    "count": hb.elements.len(),
                    "bound": hb.bound,
                    "elements": hb.elements.iter().map(|e| e.0.clone()).collect::<Vec<_>>(),
                })),
                Err(e) => domain_error(e),
            }
        }
        Command::Classify { point } => {
            let c = parse_point(&point).unwrap_or_else(|e| domain_error(e));
            let x = match x_coords(&c) {
                Ok(x) => x,
                Err(e) => domain_error(e),
            };
            match classify_family(&c) {
                Ok(fams) => {
                    let sectors = sector_of(&x);
                    ok(json!({
                        "x_coords": x.to_integers(),
                        "sectors": sectors,
                        "families": fams.iter().collect::<Vec<_>>(),
                    }))
                }
                Err(e) => domain_error(e),
            }
        }
        Command::Invert { surface, point } => {
            let c = parse_point(&point).unwrap_or_else(|e| domain_error(e));
            match surface {
                Surface::Triangle => match triangle_inverse(&c) {
                    Ok(s) => ok(serde_json::to_value(s).unwrap()),
                    Err(e) => domain_error(e),
                },
                Surface::Square => match square_inverse(&c) {
                    Ok(s) => ok(s.to_json()),
                    Err(e) => domain_error(e),
                },
                _ => domain_error("invert supports --surface triangle or square"),
            }
        }
        Command::Flipweb { schematic, point } => {
            let s = if let Some(text) = schematic {
                let v: serde_json::Value =
                    serde_json::from_str(&text).unwrap_or_else(|e| domain_error(e));
                SquareWebSchematic::from_json(&v).unwrap_or_else(|e| domain_error(e))
            } else if let Some(text) = point {
                let c = parse_point(&text).unwrap_or_else(|e| domain_error(e));
                square_inverse(&c).unwrap_or_else(|e| domain_error(e))
            } else {
                domain_error("flipweb needs --schematic or --point")
            };
            match sl3web::webs::flip_web(&s) {
                Ok(out) => ok(out.to_json()),
                Err(e) => domain_error(e),
            }
        }
        Command::Sectors { scan } => {
            let mut covered = 0usize;
            let mut multi = 0usize;
            let mut total = 0usize;
            for x1 in -scan..=scan {
                for x2 in -scan..=scan {
                    for x3 in -scan..=scan {
                        for x4 in -scan..=scan {
                            total += 1;
                            let n = sector_of(&XVector::from_integers([x1, x2, x3, x4])).len();
                            if n >= 1 {
                                covered += 1;
                            }
                            if n > 1 {
                                multi += 1;
                            }
                        }
                    }
                }
            }
            let pass = covered == total;
            verification(
                json!({
                    "pass": pass,
                    "scan": scan,
                    "points": total,
                    "covered": covered,
                    "on_walls": multi,
                }),
                pass,
            )
        }
        Command::Walls { format } => {
            let g = wall_graph();
            if format == "dot" {
                let mut out = String::from("graph walls {\n");
                for (i, l) in g.edges() {
                    out.push_str(&format!("  s{i} -- s{l};\n"));
                }
                out.push('}');
                println!("{out}");
                std::process::exit(0);
            }
            let neighbors: serde_json::Map<String, serde_json::Value> = (1u8..=42)
                .map(|i| (i.to_string(), json!(g.neighbors(i))))
                .collect();
            let crossings: Vec<serde_json::Value> = (1u8..=42)
                .flat_map(|i| {
                    g.crossings[i as usize - 1].iter().map(move |c| {
                        json!({
                            "sector": i,
                            "removed_web": WEB_NAMES[c.removed_web - 1],
                            "neighbor": c.neighbor,
                            "added_web": WEB_NAMES[c.added_web - 1],
                        })
                    }).collect::<Vec<_>>()
                })
                .collect();
            ok(json!({ "edges": g.edges(), "neighbors": neighbors, "web_mutations": crossings }))
        }
        Command::SolveX { x } => {
            let parsed: Vec<i64> = serde_json::from_str(&x).unwrap_or_else(|e| domain_error(e));
            let arr: [i64; 4] = match parsed.try_into() {
                Ok(a) => a,
                Err(_) => domain_error("x must have exactly 4 integer entries"),
            };
            let (sector, lambda) = solve_cornerless_coefficients(arr);
            let w = solve_cornerless(arr);
            let sq = build_square();
            let c = glue_coords(&w.per_face(), &sq).unwrap_or_else(|e| domain_error(e));
            ok(json!({
                "sector": sector,
                "generators": square::sector_webs(sector).map(|w| WEB_NAMES[w - 1]),
                "coefficients": lambda,
                "schematic": w.to_json(),
                "point": c.0,
            }))
        }
        Command::Verify { suite } => run_verify(suite),
    }
}

fn verify_pentagon(samples: usize, range: i64, seed: u64) -> serde_json::Value {
    let p = build_pentagon_base();
    let five = match verify_flip_loop(&p, &pentagon_flip_loop(5), samples, range, seed) {
        Ok(r) => r,
        Err(e) => domain_error(e),
    };
    let thirty_five = match verify_flip_loop(&p, &pentagon_flip_loop(35), samples, range, seed) {
        Ok(r) => r,
        Err(e) => domain_error(e),
    };
    let identity: Vec<usize> = (1..=17).collect();
    let pass = five.pass && thirty_five.pass && thirty_five.permutation == identity;
    json!({
        "pass": pass,
        "samples": samples,
        "range": range,
        "seed": seed,
        "five_flip": five,
        "thirty_five_flip": thirty_five,
    })
}

fn verify_square(samples: usize, seed: u64) -> serde_json::Value {
    match sl3web::webs::verify_square_naturality(samples, seed) {
        Ok(report) => serde_json::to_value(report).unwrap(),
        Err(e) => domain_error(e),
    }
}

fn run_verify(suite: VerifySuite) -> ! {
    match suite {
        VerifySuite::Pentagon { samples, range, seed } => {
            let v = verify_pentagon(samples, range, seed);
            let pass = v["pass"].as_bool().unwrap_or(false);
            verification(v, pass)
        }
        VerifySuite::Square { samples, seed } => {
            let v = verify_square(samples, seed);
            let pass = v["pass"].as_bool().unwrap_or(false);
            verification(v, pass)
        }
        VerifySuite::Relations => {
            let r = verify_relations();
            let pass = r.pass;
            verification(serde_json::to_value(&r).unwrap(), pass)
        }
        VerifySuite::All { samples, range, seed } => {
            let pentagon = verify_pentagon(samples, range, seed);
            let square = verify_square(samples, seed);
            let relations = verify_relations();
            let pass = pentagon["pass"].as_bool().unwrap_or(false)
                && square["pass"].as_bool().unwrap_or(false)
                && relations.pass;
            verification(
                json!({
                    "pass": pass,
                    "pentagon": pentagon,
                    "square": square,
                    "relations": relations,
                }),
                pass,
            )
        }
    }
}
