//! Line-oriented proof scripts.
//!
//! ```text
//! conclusion T1 + T2 + 1 <= T1 + T2
//! 0 gen 3
//! 1 add T1 @ 0
//! 2 idem
//! 3 mul T2 @ 2
//! 4 trans @ 1 3
//! 5 trop 1 ; 2 ; 2
//! ```
//!
//! Other rules: `gen <i> reversed`, `idem reversed`, `pos`, `refl <sum>`.
//! Blank lines and lines starting with `#` are ignored.

use super::{Derivation, ProofStep, Rule, TropTerm};
use crate::blueprint::Relation;
use crate::poly::{parse_trop_sum, MonoidSignature};
use crate::{Error, Result};

fn rule_text(rule: &Rule) -> String {
    match rule {
        Rule::Generator { index, reversed: false } => format!("gen {index}"),
        Rule::Generator { index, reversed: true } => format!("gen {index} reversed"),
        Rule::AddBoth(t) => format!("add {t}"),
        Rule::MulBoth(t) => format!("mul {t}"),
        Rule::Transitivity => "trans".into(),
        Rule::Reflexivity(x) => format!("refl {x}"),
        Rule::IdemAxiom { reversed: false } => "idem".into(),
        Rule::IdemAxiom { reversed: true } => "idem reversed".into(),
        Rule::PosAxiom => "pos".into(),
        Rule::TropAxiom { c, a, b } => format!("trop {c} ; {a} ; {b}"),
    }
}

pub fn derivation_to_script(d: &Derivation) -> String {
    let mut out = format!("conclusion {} <= {}\n", d.conclusion.lhs, d.conclusion.rhs);
    for (i, step) in d.steps.iter().enumerate() {
        out.push_str(&format!("{i} {}", rule_text(&step.rule)));
        if !step.premises.is_empty() {
            let ps: Vec<String> = step.premises.iter().map(usize::to_string).collect();
            out.push_str(&format!(" @ {}", ps.join(" ")));
        }
        out.push('\n');
    }
    out
}

fn bad(line: usize, msg: impl Into<String>) -> Error {
    Error::Format(format!("proof script line {line}: {}", msg.into()))
}

fn parse_term(text: &str, sig: MonoidSignature, line: usize) -> Result<TropTerm> {
    let sum = parse_trop_sum(text, sig)?;
    match sum.terms() {
        [t] => Ok(t.clone()),
        _ => Err(bad(line, format!("expected a single nonzero term, got {text:?}"))),
    }
}

pub fn parse_proof_script(text: &str, sig: MonoidSignature) -> Result<Derivation> {
    let mut conclusion = None;
    let mut steps = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("conclusion ") {
            let (l, r) =
                rest.split_once("<=").ok_or_else(|| bad(line_no, "conclusion must have the form lhs <= rhs"))?;
            conclusion = Some(Relation::leq(parse_trop_sum(l, sig)?, parse_trop_sum(r, sig)?));
            continue;
        }
        let (body, premises) = match line.split_once('@') {
            Some((b, p)) => (b.trim(), p.trim()),
            None => (line, ""),
        };
        let premises = premises
            .split_whitespace()
            .map(|p| p.parse::<usize>().map_err(|_| bad(line_no, format!("bad premise {p:?}"))))
            .collect::<Result<Vec<_>>>()?;
        let (index, body) = body.split_once(' ').unwrap_or((body, ""));
        let index: usize = index.parse().map_err(|_| bad(line_no, "missing step number"))?;
        if index != steps.len() {
            return Err(bad(line_no, format!("expected step {}, found {index}", steps.len())));
        }
        let body = body.trim();
        let (keyword, args) = body.split_once(' ').map_or((body, ""), |(k, a)| (k, a.trim()));
        let rule = match keyword {
            "gen" => {
                let (i, flag) = args.split_once(' ').map_or((args, ""), |(i, f)| (i, f.trim()));
                let index = i.parse().map_err(|_| bad(line_no, "gen needs a relation index"))?;
                Rule::Generator { index, reversed: flag == "reversed" }
            }
            "add" => Rule::AddBoth(parse_term(args, sig, line_no)?),
            "mul" => Rule::MulBoth(parse_term(args, sig, line_no)?),
            "trans" => Rule::Transitivity,
            "refl" => Rule::Reflexivity(parse_trop_sum(args, sig)?),
            "idem" => Rule::IdemAxiom { reversed: args == "reversed" },
            "pos" => Rule::PosAxiom,
            "trop" => {
                let parts: Vec<&str> = args.split(';').map(str::trim).collect();
                let [c, a, b] = parts.as_slice() else {
                    return Err(bad(line_no, "trop needs c ; a ; b"));
                };
                Rule::TropAxiom { c: c.parse()?, a: a.parse()?, b: b.parse()? }
            }
            other => return Err(bad(line_no, format!("unknown rule {other:?}"))),
        };
        steps.push(ProofStep { rule, premises });
    }
    let conclusion = conclusion.ok_or_else(|| bad(0, "missing conclusion line"))?;
    Ok(Derivation { steps, conclusion })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blueprint::{base_change_to_t, monomial_blueprint};
    use crate::entail::{check_derivation, derive_bend_pair};
    use crate::poly::parse_polynomial;
    use crate::scalar::{TropValue, Valuation};
    use crate::trop::bend_relations;

    #[test]
    fn bend_derivations_survive_a_round_trip() {
        let sig = MonoidSignature::polynomial(2);
        let p = parse_polynomial("T1 + T2 + 3", sig).unwrap();
        let v = Valuation::padic(3).unwrap();
        let b = base_change_to_t(&monomial_blueprint(std::slice::from_ref(&p), sig).unwrap().with_valuation(v))
            .unwrap()
            .apply_idem()
            .apply_pos();
        for r in bend_relations(&[p], &v).unwrap() {
            let (up, down) = derive_bend_pair(&b, &r).unwrap();
            for d in [up, down] {
                let text = derivation_to_script(&d);
                let back = parse_proof_script(&text, sig).unwrap();
                assert_eq!(back, d);
                assert!(check_derivation(&b, &back).unwrap());
            }
        }
    }

    #[test]
    fn all_rule_keywords() {
        let sig = MonoidSignature::polynomial(1);
        let text = "# sample\nconclusion 1 <= 1\n0 gen 2 reversed\n1 idem reversed\n2 pos\n3 refl T1 + 1\n4 trop 1 ; 1 ; 1/2\n5 trans @ 3 3\n";
        let d = parse_proof_script(text, sig).unwrap();
        assert_eq!(d.steps[0].rule, Rule::Generator { index: 2, reversed: true });
        assert_eq!(
            d.steps[4].rule,
            Rule::TropAxiom { c: TropValue::one(), a: TropValue::one(), b: TropValue::ratio(1, 2) }
        );
        assert_eq!(d.steps[5].premises, vec![3, 3]);
        assert_eq!(parse_proof_script(&derivation_to_script(&d), sig).unwrap(), d);
    }

    #[test]
    fn script_errors() {
        let sig = MonoidSignature::polynomial(1);
        assert!(parse_proof_script("0 pos\n", sig).is_err());
        assert!(parse_proof_script("conclusion 0 <= 1\n1 pos\n", sig).is_err());
        assert!(parse_proof_script("conclusion 0 <= 1\n0 frob\n", sig).is_err());
        assert!(parse_proof_script("conclusion 0 <= 1\n0 add T1 + 1 @ 0\n", sig).is_err());
    }
}
