//! Textual graph specifications:
//! `cl:<m>`, `mcl:<m>`, `gp:<n>:<t>`, `cay:<kind>:<n>:<S>`,
//! `bicay:<kind>:<n>:<R>|<L>|<S>` and `family:<k>:<params>`, where `<kind>`
//! is `dihedral`, `mclgroup`, `cyclic` or `cyclic2` and sets are
//! comma-separated words such as `b.a^3`.

use std::fmt;
use std::str::FromStr;

use crate::constructions::{
    bicayley, cayley, cross_ladder, family_builder, generalized_petersen, multi_cross_ladder,
    BiCayleyTriple, CayleySet, FamilyParams,
};
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::groups::FcGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    CrossLadder(u32),
    MultiCrossLadder(u32),
    Petersen { n: u32, t: u32 },
    Cayley(CayleySet),
    BiCayley(BiCayleyTriple),
    Family(FamilyParams),
}

fn number<T: FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad {what} `{s}`")))
}

fn group(kind: &str, n: &str) -> Result<FcGroup> {
    let g: FcGroup = format!("{kind}:{n}").parse()?;
    match g {
        FcGroup::Dihedral(n) => FcGroup::dihedral(n),
        FcGroup::Mcl(m) => FcGroup::mcl(m),
        other => Ok(other),
    }
}

fn family(k: &str, params: &str) -> Result<FamilyParams> {
    let values: Vec<&str> = params.split(',').map(str::trim).collect();
    let arity = |want: usize| {
        if values.len() == want {
            Ok(())
        } else {
            Err(Error::Parse(format!(
                "family {k} takes {want} parameter(s), got `{params}`"
            )))
        }
    };
    let p = match k.trim() {
        "1" => {
            arity(2)?;
            FamilyParams::One {
                n: number(values[0], "n")?,
                l: number(values[1], "l")?,
            }
        }
        "2" => {
            arity(2)?;
            FamilyParams::Two {
                n: number(values[0], "n")?,
                l: number(values[1], "l")?,
            }
        }
        "3" => {
            arity(1)?;
            FamilyParams::Three {
                m: number(values[0], "m")?,
            }
        }
        "4" => {
            arity(1)?;
            FamilyParams::Four {
                l: number(values[0], "l")?,
            }
        }
        other => return Err(Error::Parse(format!("unknown family `{other}`"))),
    };
    p.validate()?;
    Ok(p)
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("`{s}` has no kind prefix")))?;
        match head {
            "cl" => Ok(GraphSpec::CrossLadder(number(rest, "m")?)),
            "mcl" => Ok(GraphSpec::MultiCrossLadder(number(rest, "m")?)),
            "gp" => {
                let (n, t) = rest
                    .split_once(':')
                    .ok_or_else(|| Error::Parse("gp needs gp:<n>:<t>".into()))?;
                Ok(GraphSpec::Petersen {
                    n: number(n, "n")?,
                    t: number(t, "t")?,
                })
            }
            "cay" => {
                let mut parts = rest.splitn(3, ':');
                let (Some(kind), Some(n), Some(set)) = (parts.next(), parts.next(), parts.next())
                else {
                    return Err(Error::Parse("cay needs cay:<kind>:<n>:<S>".into()));
                };
                let g = group(kind, n)?;
                Ok(GraphSpec::Cayley(CayleySet::new(g, &g.parse_set(set)?)?))
            }
            "bicay" => {
                let mut parts = rest.splitn(3, ':');
                let (Some(kind), Some(n), Some(sets)) = (parts.next(), parts.next(), parts.next())
                else {
                    return Err(Error::Parse(
                        "bicay needs bicay:<kind>:<n>:<R>|<L>|<S>".into(),
                    ));
                };
                let sets: Vec<&str> = sets.split('|').collect();
                if sets.len() != 3 {
                    return Err(Error::Parse(format!(
                        "bicay needs three |-separated sets, got {}",
                        sets.len()
                    )));
                }
                let g = group(kind, n)?;
                Ok(GraphSpec::BiCayley(BiCayleyTriple::parse(
                    g, sets[0], sets[1], sets[2],
                )?))
            }
            "family" => {
                let (k, params) = rest
                    .split_once(':')
                    .ok_or_else(|| Error::Parse("family needs family:<k>:<params>".into()))?;
                Ok(GraphSpec::Family(family(k, params)?))
            }
            other => Err(Error::Parse(format!("unknown graph kind `{other}`"))),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::CrossLadder(m) => write!(f, "cl:{m}"),
            GraphSpec::MultiCrossLadder(m) => write!(f, "mcl:{m}"),
            GraphSpec::Petersen { n, t } => write!(f, "gp:{n}:{t}"),
            GraphSpec::Cayley(s) => {
                write!(f, "cay:{}:{}", s.group, s.group.format_set(s.elements()))
            }
            GraphSpec::BiCayley(t) => write!(f, "bicay:{}:{}", t.group, t.describe()),
            GraphSpec::Family(p) => match *p {
                FamilyParams::One { n, l } => write!(f, "family:1:{n},{l}"),
                FamilyParams::Two { n, l } => write!(f, "family:2:{n},{l}"),
                FamilyParams::Three { m } => write!(f, "family:3:{m}"),
                FamilyParams::Four { l } => write!(f, "family:4:{l}"),
            },
        }
    }
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphSpec::CrossLadder(m) => cross_ladder(*m),
            GraphSpec::MultiCrossLadder(m) => multi_cross_ladder(*m),
            GraphSpec::Petersen { n, t } => generalized_petersen(*n, *t),
            GraphSpec::Cayley(s) => Ok(cayley(s)),
            GraphSpec::BiCayley(t) => Ok(bicayley(t)),
            GraphSpec::Family(p) => Ok(family_builder(p)?.2),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for s in [
            "cl:3",
            "mcl:4",
            "gp:5:2",
            "cay:dihedral:6:b,b.a,b.a^3",
            "bicay:dihedral:10:b,b.a|b,b.a^4|1",
            "bicay:mclgroup:3:c,c.a|c.a,c.b.a^2|1",
            "family:1:15,2",
            "family:3:2",
        ] {
            let spec: GraphSpec = s.parse().unwrap();
            assert_eq!(spec.to_string().parse::<GraphSpec>().unwrap(), spec, "{s}");
            spec.build().unwrap();
        }
    }

    #[test]
    fn vertex_counts() {
        let n = |s: &str| {
            s.parse::<GraphSpec>()
                .unwrap()
                .build()
                .unwrap()
                .n_vertices()
        };
        assert_eq!(n("cl:3"), 12);
        assert_eq!(n("mcl:3"), 24);
        assert_eq!(n("gp:5:2"), 10);
        assert_eq!(n("family:4:1"), 192);
        assert_eq!(n("cay:dihedral:6:b,a,a^-1"), 12);
    }

    #[test]
    fn rejects_bad_input() {
        for s in [
            "",
            "cl",
            "xyz:3",
            "cay:dihedral:6:a",
            "bicay:dihedral:6:b|b",
            "family:1:16,2",
            "family:9:1",
            "gp:5",
        ] {
            assert!(s.parse::<GraphSpec>().is_err(), "{s}");
        }
    }
}
