//! `partpat bijection`: apply a map, apply its inverse to the result, and
//! report both.

use clap::{Args, ValueEnum};
use partpat::bijections::chunks::{thm12_inverse, thm12_map};
use partpat::bijections::fall::{fall_bijection, fall_inverse};
use partpat::bijections::hybrid::{hybrid_chain, hybrid_chain_inverse, Family124, HybridMap, SigmaVariant};
use partpat::bijections::semican::{bijection_12112_12212, bijection_12212_12112, phi, phi_inverse, KpqMatrix};
use partpat::bijections::tails::{tail_step, tail_step_inverse, Tail};
use partpat::fillings::{Filling, Shape, ShapeKind};
use partpat::seqcore::{format_symbols, parse_symbols};
use partpat::{Partition, Result};
use serde_json::json;

use crate::{Failure, Outcome};

#[derive(Clone, Copy, ValueEnum)]
pub enum Name {
    /// 1^k 2 1^(m-k) avoiders to 1^m 2 avoiders (--k, --m).
    Thm12,
    /// 2^p 1 2^q to 2^(p+q) 1 on a stack filling (--p, --q, --shape).
    Fall,
    /// Three-letter level pairs (--variant, --p, --q, --r).
    Sigma,
    /// Four-letter level pairs (--family, --p, --q).
    L124,
    /// One step of the tail recurrence (--k for the inverse).
    Tail,
    /// One row-raising step on a (k, p, q)-sequence (--m, --k, --p).
    Phi,
    /// 12112 avoiders to 12212 avoiders.
    P12112,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Variant {
    Minus,
    Plus,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Family {
    FourOne,
    OneFour,
    OneTailFour,
    FourOneTail,
}

#[derive(Args)]
pub struct BijectionArgs {
    #[arg(long, value_enum)]
    name: Name,
    /// The input: a partition, a tail, a (k, p, q)-sequence, or filling columns.
    #[arg(long)]
    apply: String,
    /// Run the inverse map instead.
    #[arg(long)]
    inverse: bool,
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long, default_value_t = 2)]
    m: usize,
    #[arg(long, default_value_t = 1)]
    p: usize,
    #[arg(long, default_value_t = 1)]
    q: usize,
    #[arg(long, default_value_t = 0)]
    r: usize,
    #[arg(long, value_enum, default_value_t = Variant::Minus)]
    variant: Variant,
    #[arg(long, value_enum, default_value_t = Family::FourOne)]
    family: Family,
    /// Column heights of the stack polyomino, for `fall`.
    #[arg(long)]
    shape: Option<String>,
}

fn small(v: usize, what: &str) -> std::result::Result<u8, Failure> {
    u8::try_from(v).map_err(|_| Failure::Usage(format!("--{what} {v} is too large")))
}

// forward and backward on one kind of object, then compare
fn pair<T: PartialEq>(
    input: T,
    inverse: bool,
    fwd: impl Fn(&T) -> Result<T>,
    bwd: impl Fn(&T) -> Result<T>,
    show: impl Fn(&T) -> String,
) -> std::result::Result<(String, String, bool), Failure> {
    let (there, back): (&dyn Fn(&T) -> Result<T>, &dyn Fn(&T) -> Result<T>) =
        if inverse { (&bwd, &fwd) } else { (&fwd, &bwd) };
    let out = there(&input)?;
    let ok = back(&out)? == input;
    Ok((show(&input), show(&out), ok))
}

pub fn run(a: &BijectionArgs, json_out: bool) -> Outcome {
    let partition = || -> std::result::Result<Partition, Failure> { Ok(Partition::new(parse_symbols(&a.apply)?)?) };
    let pshow = |p: &Partition| p.to_string();
    let (input, output, ok) = match a.name {
        Name::Thm12 => {
            let (k, m) = (a.k, a.m);
            pair(partition()?, a.inverse, |p| thm12_map(p, k, m), |p| thm12_inverse(p, k, m), pshow)?
        }
        Name::Sigma | Name::L124 => {
            let map = match a.name {
                Name::Sigma => HybridMap::Sigma {
                    variant: match a.variant {
                        Variant::Minus => SigmaVariant::Minus,
                        Variant::Plus => SigmaVariant::Plus,
                    },
                    p: a.p,
                    q: a.q,
                    r: a.r,
                },
                _ => HybridMap::Level124 {
                    family: match a.family {
                        Family::FourOne => Family124::FourOne,
                        Family::OneFour => Family124::OneFour,
                        Family::OneTailFour => Family124::OneTailFour,
                        Family::FourOneTail => Family124::FourOneTail,
                    },
                    p: a.p,
                    q: a.q,
                },
            };
            pair(partition()?, a.inverse, |p| hybrid_chain(p, &map), |p| hybrid_chain_inverse(p, &map), pshow)?
        }
        Name::P12112 => pair(partition()?, a.inverse, bijection_12112_12212, bijection_12212_12112, pshow)?,
        Name::Tail => {
            let t = Tail::new(parse_symbols(&a.apply)?)?;
            let k = if a.inverse { small(a.k, "k")? } else { t.last() };
            let show = |t: &Tail| format_symbols(t.as_slice());
            if a.inverse {
                let out = tail_step_inverse(&t, k)?;
                let ok = tail_step(&out)? == t;
                (show(&t), show(&out), ok)
            } else {
                let out = tail_step(&t)?;
                let ok = tail_step_inverse(&out, k)? == t;
                (show(&t), show(&out), ok)
            }
        }
        Name::Phi => {
            let (m, k, p) = (small(a.m, "m")?, small(a.k, "k")?, small(a.p, "p")?);
            let x = KpqMatrix::new(parse_symbols(&a.apply)?, m, k, p)?;
            let show = |x: &KpqMatrix| format!("{} (p = {}, q = {})", format_symbols(x.as_slice()), x.p(), x.q());
            pair(x, a.inverse, phi, phi_inverse, show)?
        }
        Name::Fall => {
            let shape = a.shape.as_deref().ok_or_else(|| Failure::Usage("fall needs --shape".into()))?;
            let s = Shape::parse(shape, ShapeKind::Stack)?;
            let f = Filling::new(s, parse_symbols(&a.apply)?)?;
            let (p, q) = (a.p, a.q);
            let show = |f: &Filling| format_symbols(f.columns());
            pair(f, a.inverse, |f| fall_bijection(f, p, q), |f| fall_inverse(f, p, q), show)?
        }
    };
    let text = if json_out {
        json!({"input": input, "output": output, "verified": ok}).to_string()
    } else {
        format!("{input} -> {output}")
    };
    if ok {
        Ok(text)
    } else {
        Err(Failure::Negative(format!("{text}\nround trip failed")))
    }
}
