//! Self-contained parameter certificates.
//!
//! A certificate packages a claimed parameter value together with the
//! cover witnessing it: the graph in graph6 form, the cover of its
//! complement, and the cover's statistics. Verification reparses the
//! graph, rechecks the cover from scratch, and confirms that the claimed
//! value, class, and statistics are consistent with the parameter, so a
//! certificate can be checked without trusting the solver that made it.

use crate::cover::{verify_cover, CoCover, CoverClass, CoverStats};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, write_graph6};
use crate::solver::Solution;
use serde::{Deserialize, Serialize};

/// The parameter a certificate claims a value for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parameter {
    #[serde(rename = "box")]
    Box,
    #[serde(rename = "localbox")]
    LocalBox,
    #[serde(rename = "unionbox")]
    UnionBox,
}

/// The cover part of a certificate: bag class and bag edge lists. The
/// covered graph is the complement of the certificate's host graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverBody {
    pub class: CoverClass,
    pub bags: Vec<Vec<(usize, usize)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub parameter: Parameter,
    pub value: usize,
    pub host_graph6: String,
    pub complement_cover: CoverBody,
    pub stats: CoverStats,
}

impl Certificate {
    /// Packages a solver solution for `h` as a certificate. The witness
    /// class decides how the value is read: bag count for the global
    /// parameters, maximum load for the local one.
    pub fn from_solution(parameter: Parameter, h: &Graph, sol: &Solution) -> Result<Certificate> {
        let cert = Certificate {
            parameter,
            value: sol.value,
            host_graph6: write_graph6(h)?,
            complement_cover: CoverBody {
                class: sol.witness.class,
                bags: sol.witness.bags.clone(),
            },
            stats: sol.stats,
        };
        cert.verify()?;
        Ok(cert)
    }

    /// Reconstructs the host graph this certificate is about.
    pub fn host(&self) -> Result<Graph> {
        parse_graph6(&self.host_graph6)
    }

    /// Reconstructs the witnessing cover of the host's complement.
    pub fn cover(&self) -> Result<CoCover> {
        Ok(CoCover {
            host: self.host()?.complement(),
            bags: self.complement_cover.bags.clone(),
            class: self.complement_cover.class,
        })
    }

    /// Full recheck: the cover must verify against the complement of the
    /// host graph, the recomputed statistics must equal the claimed ones,
    /// and the value must match the statistic named by the parameter
    /// (with the bag class the parameter demands). Returns the verified
    /// statistics.
    pub fn verify(&self) -> Result<CoverStats> {
        let stats = verify_cover(&self.cover()?)?;
        if stats != self.stats {
            return Err(Error::Certificate(format!(
                "claimed stats t = {}, s = {} but the cover has t = {}, s = {}",
                self.stats.globality, self.stats.locality, stats.globality, stats.locality
            )));
        }
        let (needed_class, actual) = match self.parameter {
            Parameter::Box => (Some(CoverClass::CoInterval), stats.globality),
            Parameter::UnionBox => (Some(CoverClass::UnionCoInterval), stats.globality),
            Parameter::LocalBox => (None, stats.locality),
        };
        if let Some(class) = needed_class {
            if self.complement_cover.class != class {
                return Err(Error::Certificate(format!(
                    "parameter {:?} requires a {:?}-class cover, found {:?}",
                    self.parameter, class, self.complement_cover.class
                )));
            }
        }
        if self.value != actual {
            return Err(Error::Certificate(format!(
                "claimed value {} but the cover witnesses {}",
                self.value, actual
            )));
        }
        Ok(stats)
    }
}
