//! The `rainbow` command line tool.
//!
//! Exit codes: 0 for success or a "yes" answer, 1 for a "no" answer, 2 for
//! malformed input, contract violations and exceeded limits.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bcc::{solve_bcc, verify_bipartition};
use crate::dot::export_dot;
use crate::equivalence::{
    bipartite_to_matrix, bipartite_to_packing, colouring_to_packing, decide_bipartite_rainbow,
    rc2_core_to_bipartite, verify_bipartite_rainbow,
};
use crate::error::Error;
use crate::exact::{rainbow_colouring_with_k, rc_exact, solve_rc2_with_budget, DEFAULT_EDGE_LIMIT};
use crate::formats::*;
use crate::generate::{random_3cnf, random_split, random_threshold, special_graph, SpecialKind};
use crate::graph::{is_connected, is_threshold, pendant_set, recognize_split, Graph};
use crate::parity::DEFAULT_NODE_BUDGET;
use crate::rainbow::{
    rc_lower_bound, verify_rainbow_with_budget, EdgeColouring, DEFAULT_MASK_BUDGET,
};
use crate::reduction::{
    assignment_to_bipartition, bcc_to_rc2, bipartition_to_assignment, bipartition_to_colouring,
    colouring_to_bipartition, sat_to_bcc, Rc2GadgetLabels, SatGadgetLabels,
};
use crate::split_rc::{build_anatomy, colour_with_k, decide_rc_at_most_k, rc_split};

#[derive(Parser, Debug)]
#[command(
    name = "rainbow",
    version,
    about = "Rainbow colourings of split graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(clap::Args, Debug, Clone)]
pub struct Limits {
    /// Largest edge count accepted by the exhaustive colouring search
    #[arg(long, default_value_t = DEFAULT_EDGE_LIMIT)]
    pub edge_limit: usize,
    /// Largest palette accepted by the colour-set path search
    #[arg(long, default_value_t = DEFAULT_MASK_BUDGET)]
    pub mask_budget: usize,
    /// Search-node budget of the backtracking solvers
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    pub budget: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Report whether a graph is split / threshold, with its partition
    Recognize { graph: PathBuf },
    /// Print the clique anatomy used by the split colourings
    Anatomy { graph: PathBuf },
    /// Rainbow connection number, optionally writing a witness colouring
    Rc {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = RcMode::Split)]
        mode: RcMode,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        limits: Limits,
    },
    /// Is rc(G) <= k? Exit 0 for yes, 1 for no
    Decide {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        limits: Limits,
    },
    /// Write a rainbow colouring with at most k colours
    Colour {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        limits: Limits,
    },
    /// Check a colouring; exit 0 when rainbow connected
    Verify {
        graph: PathBuf,
        colouring: PathBuf,
        /// Palette size; defaults to one more than the largest colour
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        report: Option<PathBuf>,
        #[command(flatten)]
        limits: Limits,
    },
    /// Transform an instance
    Reduce {
        #[arg(value_enum)]
        kind: ReduceKind,
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Labels file: written by sat2bcc / bcc2rc2, read by rc2bipartite
        #[arg(long)]
        labels: Option<PathBuf>,
    },
    /// Carry a certificate across a reduction
    Lift {
        #[arg(value_enum)]
        kind: LiftKind,
        #[arg(long)]
        cnf: Option<PathBuf>,
        #[arg(long)]
        bcc: Option<PathBuf>,
        #[arg(long)]
        bipartite: Option<PathBuf>,
        #[arg(long)]
        eval: Option<PathBuf>,
        #[arg(long)]
        x: Option<PathBuf>,
        #[arg(long)]
        colouring: Option<PathBuf>,
        #[arg(long)]
        labels: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate an instance
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(long, default_value_t = 4)]
        clique: usize,
        /// Extra non-pendant independent vertices (special shapes)
        #[arg(long, default_value_t = 0)]
        extra: usize,
        /// Independent vertices (random-split)
        #[arg(long, default_value_t = 8)]
        indep: usize,
        #[arg(long, default_value_t = 0.3)]
        pendant_prob: f64,
        /// Vertices (random-threshold)
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        dominate_prob: f64,
        #[arg(long, default_value_t = 4)]
        vars: usize,
        #[arg(long, default_value_t = 3)]
        clauses: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Graphviz export
    Dot {
        graph: PathBuf,
        #[arg(long)]
        colouring: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve a biclique-cover-by-bipartitioning instance
    SolveBcc {
        instance: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Two-colour the cross edges of a bipartite instance
    SolveBipartite {
        instance: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum RcMode {
    Exact,
    Split,
    LowerBound,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReduceKind {
    Sat2bcc,
    Bcc2rc2,
    Rc2bipartite,
    Bip2matrix,
    Bip2packing,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftKind {
    #[value(name = "eval2X")]
    Eval2X,
    #[value(name = "X2eval")]
    X2Eval,
    #[value(name = "X2col")]
    X2Col,
    #[value(name = "col2X")]
    Col2X,
    #[value(name = "col2packing")]
    Col2Packing,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    G111,
    G400,
    G310,
    G2200,
    G220,
    G220z,
    RandomSplit,
    RandomThreshold,
    Random3cnf,
}

/// Failure of a command, already rendered for the user.
#[derive(Debug)]
pub struct CliError(pub String);

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError(e.to_string())
    }
}

type Outcome = Result<bool, CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

/// Reads and parses a file, prefixing diagnostics with its path.
fn load<T>(
    path: &Path,
    parse: impl FnOnce(&str) -> crate::error::Result<T>,
) -> Result<T, CliError> {
    let text = read(path)?;
    parse(&text).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| CliError(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            match stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
            {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    Err(CliError(format!("stdout: {e}")))
                }
                _ => Ok(()),
            }
        }
    }
}

fn say(line: impl std::fmt::Display) -> Result<(), CliError> {
    emit(None, &format!("{line}\n"))
}

fn need<'a>(opt: &'a Option<PathBuf>, flag: &str) -> Result<&'a Path, CliError> {
    opt.as_deref()
        .ok_or_else(|| CliError(format!("this lift needs --{flag}")))
}

fn list(vs: &[usize]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Any colouring with at most `k` colours: the polynomial construction for
/// split graphs when `k >= 4`, exhaustive search otherwise.
fn find_colouring(g: &Graph, k: usize, limits: &Limits) -> Result<Option<EdgeColouring>, CliError> {
    if !is_connected(g) {
        return Err(Error::Disconnected.into());
    }
    if k >= 4 && recognize_split(g).is_some() {
        return Ok(if decide_rc_at_most_k(g, k)? {
            Some(colour_with_k(g, k)?)
        } else {
            None
        });
    }
    if k == 0 {
        return Ok((g.vertex_count() <= 1).then(|| EdgeColouring::uniform(g, 1, 0)));
    }
    if k == 1 {
        return Ok(g.is_complete().then(|| EdgeColouring::uniform(g, 1, 0)));
    }
    if k == 2 {
        if g.is_complete() {
            return Ok(Some(EdgeColouring::uniform(g, 2, 0)));
        }
        return Ok(solve_rc2_with_budget(g, limits.budget)?);
    }
    if rc_lower_bound(g)? > k {
        return Ok(None);
    }
    Ok(rainbow_colouring_with_k(g, k, limits.edge_limit)?)
}

pub fn dispatch(cli: Cli) -> Outcome {
    match cli.command {
        Command::Recognize { graph } => {
            let g = load(&graph, parse_graph)?;
            let sp = recognize_split(&g);
            let mut s = format!(
                "split {}\nthreshold {}\n",
                if sp.is_some() { "yes" } else { "no" },
                if is_threshold(&g) { "yes" } else { "no" }
            );
            if let Some(sp) = &sp {
                s += &format!(
                    "clique {}\nindependent {}\n",
                    list(&sp.clique),
                    list(&sp.independent)
                );
            }
            s += &format!("pendants {}\n", list(&pendant_set(&g)));
            emit(None, &s)?;
            Ok(sp.is_some())
        }
        Command::Anatomy { graph } => {
            let g = load(&graph, parse_graph)?;
            let sp = recognize_split(&g).ok_or_else(|| CliError("graph is not split".into()))?;
            emit(None, &build_anatomy(&g, &sp)?.to_string())?;
            Ok(true)
        }
        Command::Rc {
            graph,
            mode,
            out,
            limits,
        } => {
            let g = load(&graph, parse_graph)?;
            let (rc, witness) = match mode {
                RcMode::LowerBound => (rc_lower_bound(&g)?, None),
                RcMode::Exact => {
                    let (rc, c) = rc_exact(&g, limits.edge_limit)?;
                    (rc, Some(c))
                }
                RcMode::Split => {
                    let (rc, c) = rc_split(&g, limits.edge_limit)?;
                    (rc, Some(c))
                }
            };
            if let Some(c) = &witness {
                let report = verify_rainbow_with_budget(&g, c, limits.mask_budget.max(c.k()))?;
                if !report.connected {
                    return Err(CliError("internal error: witness is not rainbow".into()));
                }
            }
            say(rc)?;
            if let (Some(out), Some(c)) = (out, witness) {
                emit(Some(&out), &write_colouring(&g, &c))?;
            }
            Ok(true)
        }
        Command::Decide { graph, k, limits } => {
            let g = load(&graph, parse_graph)?;
            let yes = if k >= 4 && recognize_split(&g).is_some() {
                decide_rc_at_most_k(&g, k)?
            } else {
                find_colouring(&g, k, &limits)?.is_some()
            };
            say(if yes { "yes" } else { "no" })?;
            Ok(yes)
        }
        Command::Colour {
            graph,
            k,
            out,
            limits,
        } => {
            let g = load(&graph, parse_graph)?;
            match find_colouring(&g, k, &limits)? {
                Some(c) => {
                    emit(out.as_deref(), &write_colouring(&g, &c))?;
                    Ok(true)
                }
                None => {
                    eprintln!("no rainbow colouring with {k} colours");
                    Ok(false)
                }
            }
        }
        Command::Verify {
            graph,
            colouring,
            k,
            report,
            limits,
        } => {
            let g = load(&graph, parse_graph)?;
            let c = load(&colouring, |t| parse_colouring(&g, t, k))?;
            let r = verify_rainbow_with_budget(&g, &c, limits.mask_budget)?;
            emit(report.as_deref(), &write_report(&c, &r))?;
            Ok(r.connected)
        }
        Command::Reduce {
            kind,
            input,
            out,
            labels,
        } => {
            let out = out.as_deref();
            match kind {
                ReduceKind::Sat2bcc => {
                    let phi = load(&input, parse_dimacs)?;
                    let (inst, lab) = sat_to_bcc(&phi);
                    emit(out, &write_bcc(&inst))?;
                    if let Some(l) = labels {
                        emit(Some(&l), &write_sat_labels(&lab))?;
                    }
                }
                ReduceKind::Bcc2rc2 => {
                    let inst = load(&input, parse_bcc)?;
                    let (g, lab) = bcc_to_rc2(&inst);
                    emit(out, &write_graph(&g))?;
                    if let Some(l) = labels {
                        emit(Some(&l), &write_rc2_labels(&lab))?;
                    }
                }
                ReduceKind::Rc2bipartite => {
                    let g = load(&input, parse_graph)?;
                    let lab = load(need(&labels, "labels")?, parse_rc2_labels)?;
                    emit(out, &write_bipartite(&rc2_core_to_bipartite(&g, &lab)?))?;
                }
                ReduceKind::Bip2matrix => {
                    let h = load(&input, parse_bipartite)?;
                    emit(out, &write_matrix(&bipartite_to_matrix(&h)))?;
                }
                ReduceKind::Bip2packing => {
                    let h = load(&input, parse_bipartite)?;
                    emit(out, &write_packing(&bipartite_to_packing(&h)))?;
                }
            }
            Ok(true)
        }
        Command::Lift {
            kind,
            cnf,
            bcc,
            bipartite,
            eval,
            x,
            colouring,
            labels,
            out,
        } => lift(
            kind,
            &cnf,
            &bcc,
            &bipartite,
            &eval,
            &x,
            &colouring,
            &labels,
            out.as_deref(),
        ),
        Command::Gen {
            kind,
            clique,
            extra,
            indep,
            pendant_prob,
            n,
            dominate_prob,
            vars,
            clauses,
            seed,
            out,
        } => {
            let special = |k| special_graph(k, clique, extra, seed);
            let text = match kind {
                GenKind::G111 => write_graph(&special(SpecialKind::G111)?),
                GenKind::G400 => write_graph(&special(SpecialKind::G400)?),
                GenKind::G310 => write_graph(&special(SpecialKind::G310)?),
                GenKind::G2200 => write_graph(&special(SpecialKind::G2200)?),
                GenKind::G220 => write_graph(&special(SpecialKind::G220)?),
                GenKind::G220z => write_graph(&special(SpecialKind::G220z)?),
                GenKind::RandomSplit => {
                    write_graph(&random_split(clique, indep, pendant_prob, seed)?)
                }
                GenKind::RandomThreshold => write_graph(&random_threshold(n, dominate_prob, seed)?),
                GenKind::Random3cnf => write_dimacs(&random_3cnf(vars, clauses, seed)?),
            };
            emit(out.as_deref(), &text)?;
            Ok(true)
        }
        Command::Dot {
            graph,
            colouring,
            out,
        } => {
            let g = load(&graph, parse_graph)?;
            let c = match colouring {
                Some(p) => Some(load(&p, |t| parse_colouring(&g, t, None))?),
                None => None,
            };
            emit(out.as_deref(), &export_dot(&g, c.as_ref()))?;
            Ok(true)
        }
        Command::SolveBcc {
            instance,
            budget,
            out,
        } => {
            let inst = load(&instance, parse_bcc)?;
            match solve_bcc(&inst, budget)? {
                Some(x) => {
                    emit(out.as_deref(), &write_bipartition(&x))?;
                    Ok(true)
                }
                None => {
                    say("no")?;
                    Ok(false)
                }
            }
        }
        Command::SolveBipartite {
            instance,
            budget,
            out,
        } => {
            let h = load(&instance, parse_bipartite)?;
            match decide_bipartite_rainbow(&h, budget)? {
                Some(col) => {
                    emit(out.as_deref(), &write_bipartite_colouring(&h, &col))?;
                    Ok(true)
                }
                None => {
                    say("no")?;
                    Ok(false)
                }
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn lift(
    kind: LiftKind,
    cnf: &Option<PathBuf>,
    bcc: &Option<PathBuf>,
    bipartite: &Option<PathBuf>,
    eval: &Option<PathBuf>,
    x: &Option<PathBuf>,
    colouring: &Option<PathBuf>,
    labels: &Option<PathBuf>,
    out: Option<&Path>,
) -> Outcome {
    let sat_side = || -> Result<_, CliError> {
        let phi = load(need(cnf, "cnf")?, parse_dimacs)?;
        let (inst, standard) = sat_to_bcc(&phi);
        if let Some(p) = labels {
            let given: SatGadgetLabels = load(p, parse_sat_labels)?;
            if given != standard {
                return Err(CliError(format!(
                    "{}: labels do not describe the instance built from the formula",
                    p.display()
                )));
            }
        }
        Ok((phi, inst, standard))
    };
    let rc2_side = || -> Result<_, CliError> {
        let inst = load(need(bcc, "bcc")?, parse_bcc)?;
        let (g, standard) = bcc_to_rc2(&inst);
        if let Some(p) = labels {
            let given: Rc2GadgetLabels = load(p, parse_rc2_labels)?;
            if given != standard {
                return Err(CliError(format!(
                    "{}: labels do not describe the graph built from the instance",
                    p.display()
                )));
            }
        }
        Ok((inst, g, standard))
    };
    match kind {
        LiftKind::Eval2X => {
            let (phi, inst, lab) = sat_side()?;
            let e = load(need(eval, "eval")?, |t| parse_assignment(phi.num_vars(), t))?;
            let xs = assignment_to_bipartition(&phi, &lab, &e)?;
            let (ok, _) = verify_bipartition(&inst, &xs)?;
            emit(out, &write_bipartition(&xs))?;
            if !ok {
                eprintln!("assignment does not satisfy the formula; the bipartitioning leaves edges uncovered");
            }
            Ok(ok)
        }
        LiftKind::X2Eval => {
            let (phi, inst, lab) = sat_side()?;
            let xs = load(need(x, "x")?, |t| parse_bipartition(&inst, t))?;
            let e = bipartition_to_assignment(&phi, &inst, &lab, &xs)?;
            emit(out, &write_assignment(&e))?;
            Ok(true)
        }
        LiftKind::X2Col => {
            let (inst, g, lab) = rc2_side()?;
            let xs = load(need(x, "x")?, |t| parse_bipartition(&inst, t))?;
            let c = bipartition_to_colouring(&inst, &lab, &g, &xs)?;
            emit(out, &write_colouring(&g, &c))?;
            Ok(true)
        }
        LiftKind::Col2X => {
            let (inst, g, lab) = rc2_side()?;
            let c = load(need(colouring, "colouring")?, |t| {
                parse_colouring(&g, t, Some(2))
            })?;
            let xs = colouring_to_bipartition(&inst, &lab, &g, &c)?;
            emit(out, &write_bipartition(&xs))?;
            Ok(true)
        }
        LiftKind::Col2Packing => {
            let h = load(need(bipartite, "bipartite")?, parse_bipartite)?;
            let col = load(need(colouring, "colouring")?, |t| {
                parse_bipartite_colouring(&h, t)
            })?;
            if !verify_bipartite_rainbow(&h, &col) {
                return Err(CliError(
                    "colouring leaves a pair of B vertices without a rainbow path".into(),
                ));
            }
            emit(
                out,
                &write_placement(h.n_a, &colouring_to_packing(&h, &col)),
            )?;
            Ok(true)
        }
    }
}

/// Parses the process arguments, runs the command and returns the exit code.
pub fn run() -> u8 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}
