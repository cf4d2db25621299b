use std::io::Read;
use std::path::{Path, PathBuf};

use double_wedge::algorithms::{
    bounding_lines, decide_intersection, intersect_general, intersect_with, solve_sas, SasInstance,
};
use double_wedge::arrangement::{render_svg, Arrangement, SvgOptions};
use double_wedge::constructions::{
    geombase_from_3sum, make_grating, make_nonagon_family, random_wedges, sas_from_geombase,
    RandomSpec,
};
use double_wedge::geom::DoubleWedge;
use double_wedge::io::{
    decide_report, from_json, intersect_report, stab_report, to_json, WedgeInstance,
};

use crate::args::{Cli, Command, Generate};
use crate::{bench, verify, Failure};

pub fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Intersect { io, algo, svg } => {
            let inst: WedgeInstance = from_json(&read_input(&io.input)?)?;
            let res = intersect_with(algo.algorithm(), &inst.wedges)?;
            check_witnesses(&inst.wedges, &res.witnesses)?;
            if let Some(path) = svg {
                write_file(&path, &svg_of(&inst.wedges, &SvgOptions::default()))?;
            }
            write_output(io.out.as_deref(), &to_json(&intersect_report(&res)))
        }
        Command::Decide { io } => {
            let inst: WedgeInstance = from_json(&read_input(&io.input)?)?;
            let w = decide_intersection(&inst.wedges);
            check_witnesses(&inst.wedges, w.as_slice())?;
            write_output(io.out.as_deref(), &to_json(&decide_report(w.as_ref())))
        }
        Command::Stab { io } => {
            let inst: SasInstance = from_json(&read_input(&io.input)?)?;
            let t = solve_sas(&inst);
            if t.as_ref().is_some_and(|t| !inst.accepts(t)) {
                return Err(Failure::Internal(anyhow::anyhow!(
                    "returned line fails the instance"
                )));
            }
            write_output(io.out.as_deref(), &to_json(&stab_report(t.as_ref())))
        }
        Command::Generate(g) => generate(g),
        Command::Verify(v) => verify::run(v),
        Command::Render {
            input,
            svg,
            width,
            precision,
        } => {
            let inst: WedgeInstance = from_json(&read_input(&input)?)?;
            write_file(
                &svg,
                &svg_of(&inst.wedges, &SvgOptions { width, precision }),
            )
        }
        Command::Bench {
            algo,
            sizes,
            seed,
            out,
        } => {
            let sizes = bench::parse_sizes(&sizes).map_err(Failure::Input)?;
            let csv = bench::run(algo, &sizes, seed)?;
            write_output(out.as_deref(), &csv)
        }
    }
}

fn generate(g: Generate) -> Result<(), Failure> {
    let (text, out) = match g {
        Generate::Grating { k, out } => {
            let wedges = make_grating(k)?;
            (to_json(&WedgeInstance { wedges, seed: None }), out)
        }
        Generate::Nonagon { precision, out } => (to_json(&make_nonagon_family(precision)?), out),
        Generate::SasFrom3sum { numbers, out } => (
            to_json(&sas_from_geombase(&geombase_from_3sum(&numbers))),
            out,
        ),
        Generate::Random {
            n,
            hourglasses,
            seed,
            out,
        } => {
            if hourglasses > n {
                return Err(Failure::Input(anyhow::anyhow!(
                    "--hourglasses {hourglasses} exceeds --n {n}"
                )));
            }
            let spec = RandomSpec {
                closed: None,
                ..RandomSpec::new(n, hourglasses, seed)
            };
            let inst = WedgeInstance {
                wedges: random_wedges(&spec),
                seed: Some(seed),
            };
            (to_json(&inst), out)
        }
    };
    write_output(out.as_deref(), &text)
}

fn svg_of(wedges: &[DoubleWedge], opts: &SvgOptions) -> String {
    let arr = Arrangement::build(&bounding_lines(wedges));
    let res = intersect_general(wedges);
    render_svg(
        &arr,
        res.cells.as_ref().expect("general result has cells"),
        opts,
    )
}

/// Every reported witness must lie in every wedge.
fn check_witnesses(
    wedges: &[DoubleWedge],
    witnesses: &[double_wedge::geom::Point],
) -> Result<(), Failure> {
    for p in witnesses {
        if let Some(i) = wedges.iter().position(|d| !d.contains(p)) {
            return Err(Failure::Internal(anyhow::anyhow!(
                "witness {p:?} outside wedge {i}"
            )));
        }
    }
    Ok(())
}

pub fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(anyhow::anyhow!("reading {}: {e}", path.display())))
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text)
        .map_err(|e| Failure::Input(anyhow::anyhow!("writing {}: {e}", path.display())))
}

pub fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => write_file(&p.to_path_buf(), text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
