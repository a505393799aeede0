//! A parsed model file: domains, pLTSs, pNets, and hole fills.

use crate::domain::DomainDecl;
use crate::plts::PLts;
use crate::pnet::PNet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fill {
    pub net: String,
    pub hole: String,
    pub filler: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ModelFile {
    pub domains: Vec<DomainDecl>,
    pub plts: Vec<PLts>,
    pub pnets: Vec<PNet>,
    pub fills: Vec<Fill>,
}

impl ModelFile {
    pub fn plts(&self, name: &str) -> Option<&PLts> {
        self.plts.iter().find(|p| p.name == name)
    }

    pub fn pnet(&self, name: &str) -> Option<&PNet> {
        self.pnets.iter().find(|n| n.name == name)
    }

    pub fn filler_of(&self, net: &str, hole: &str) -> Option<&str> {
        self.fills
            .iter()
            .find(|f| f.net == net && f.hole == hole)
            .map(|f| f.filler.as_str())
    }

    /// Nets never used as fillers, in declaration order.
    pub fn root_nets(&self) -> Vec<&PNet> {
        self.pnets
            .iter()
            .filter(|n| !self.fills.iter().any(|f| f.filler == n.name))
            .collect()
    }

    /// Cross-reference validation: unique names per category, fills resolve,
    /// pLTS structure sound.
    pub fn validate(&self) -> Result<(), String> {
        let mut names: Vec<&str> = Vec::new();
        for n in self
            .domains
            .iter()
            .map(|d| d.name.as_str())
            .chain(self.plts.iter().map(|p| p.name.as_str()))
            .chain(self.pnets.iter().map(|n| n.name.as_str()))
        {
            if names.contains(&n) {
                return Err(format!("duplicate name `{n}`"));
            }
            names.push(n);
        }
        for p in &self.plts {
            p.validate(&self.domains)?;
        }
        for n in &self.pnets {
            n.validate()?;
        }
        for f in &self.fills {
            let net = self
                .pnet(&f.net)
                .ok_or_else(|| format!("fill references unknown net `{}`", f.net))?;
            if net.hole(&f.hole).is_none() {
                return Err(format!(
                    "fill references unknown hole `{}.{}`",
                    f.net, f.hole
                ));
            }
            if self.plts(&f.filler).is_none() && self.pnet(&f.filler).is_none() {
                return Err(format!("fill references unknown filler `{}`", f.filler));
            }
        }
        Ok(())
    }
}
