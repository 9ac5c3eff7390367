//! Serializable views of the catalog.
//!
//! [`export_catalog`] renders every family — parameters, domain, bracket
//! relations, and subfamily claims — into plain strings with deterministic
//! key order, so two exports of the same catalog are byte-identical JSON.
//! The committed golden catalog file is exactly this export, and
//! verification reports embed it for diffing.

use serde::Serialize;

use crate::families::{
    Branch, Catalog, ClaimOutcome, DomainConstraint, FamilySpec, HermClass, Relation,
    SubfamilyClaim,
};
use crate::liealg::{W, X, Y, Z};
use crate::Vector4;

/// The whole catalog, rendered.
#[derive(Serialize, Clone, Debug)]
pub struct CatalogExport {
    pub families: Vec<FamilyExport>,
}

#[derive(Serialize, Clone, Debug)]
pub struct FamilyExport {
    pub id: u8,
    pub case: String,
    pub tag: String,
    pub params: Vec<String>,
    pub constraints: Vec<ConstraintExport>,
    pub brackets: BracketsExport,
    pub claims: Vec<ClaimExport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Serialize, Clone, Debug)]
pub struct ConstraintExport {
    pub expr: String,
    pub relation: Relation,
}

/// The six independent bracket relations, keyed by argument pair.
#[derive(Serialize, Clone, Debug)]
pub struct BracketsExport {
    #[serde(rename = "WZ")]
    pub wz: Vector4,
    #[serde(rename = "ZX")]
    pub zx: Vector4,
    #[serde(rename = "ZY")]
    pub zy: Vector4,
    #[serde(rename = "WX")]
    pub wx: Vector4,
    #[serde(rename = "WY")]
    pub wy: Vector4,
    #[serde(rename = "YX")]
    pub yx: Vector4,
}

#[derive(Serialize, Clone, Debug)]
pub struct ClaimExport {
    pub class: HermClass,
    /// "whole", "parametric", or "empty".
    pub outcome: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub branches: Vec<BranchExport>,
    /// Expressions cutting the locus out of the family domain.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub locus: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Serialize, Clone, Debug)]
pub struct BranchExport {
    pub label: String,
    pub params: Vec<String>,
    pub map: Vec<SubstExport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub constraints: Vec<ConstraintExport>,
}

#[derive(Serialize, Clone, Debug)]
pub struct SubstExport {
    pub param: String,
    pub value: String,
}

fn constraint_export(c: &DomainConstraint) -> ConstraintExport {
    ConstraintExport { expr: c.expr.to_string(), relation: c.relation }
}

fn branch_export(b: &Branch) -> BranchExport {
    BranchExport {
        label: b.label.clone(),
        params: b.params.iter().map(|p| p.name().to_string()).collect(),
        map: b
            .map
            .iter()
            .map(|(p, e)| SubstExport { param: p.name().to_string(), value: e.to_string() })
            .collect(),
        constraints: b.constraints.iter().map(constraint_export).collect(),
    }
}

fn claim_export(claim: &SubfamilyClaim) -> ClaimExport {
    let (branches, locus, obstruction) = match &claim.outcome {
        ClaimOutcome::Whole => (Vec::new(), Vec::new(), None),
        ClaimOutcome::Parametric { branches, constraint_exprs } => (
            branches.iter().map(branch_export).collect(),
            constraint_exprs.iter().map(|e| e.to_string()).collect(),
            None,
        ),
        ClaimOutcome::Empty { obstruction, .. } => {
            (Vec::new(), Vec::new(), Some(obstruction.to_string()))
        }
    };
    ClaimExport {
        class: claim.class,
        outcome: claim.outcome.kind().to_string(),
        branches,
        locus,
        obstruction,
        notes: claim.notes.clone(),
    }
}

fn family_export(family: &FamilySpec, claims: &[&SubfamilyClaim]) -> FamilyExport {
    let t = family.sc.to_bracket_table();
    FamilyExport {
        id: family.id,
        case: family.case.to_string(),
        tag: family.tag.to_string(),
        params: family.params.iter().map(|p| p.name().to_string()).collect(),
        constraints: family.constraints.iter().map(constraint_export).collect(),
        brackets: BracketsExport {
            wz: t.entry(W, Z).clone(),
            zx: t.entry(Z, X).clone(),
            zy: t.entry(Z, Y).clone(),
            wx: t.entry(W, X).clone(),
            wy: t.entry(W, Y).clone(),
            yx: t.entry(Y, X).clone(),
        },
        claims: claims.iter().copied().map(claim_export).collect(),
        notes: family.notes.clone(),
    }
}

/// Renders the catalog with claims attached to their families in
/// almost Kähler, integrable, Kähler order.
pub fn export_catalog(catalog: &Catalog) -> CatalogExport {
    let families = catalog
        .families
        .iter()
        .map(|f| {
            let claims: Vec<&SubfamilyClaim> = HermClass::ALL
                .iter()
                .filter_map(|class| catalog.claim(f.id, *class))
                .collect();
            family_export(f, &claims)
        })
        .collect();
    CatalogExport { families }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn export_is_deterministic_and_complete() {
        let catalog = Catalog::standard();
        let a = serde_json::to_string_pretty(&export_catalog(&catalog)).unwrap();
        let b = serde_json::to_string_pretty(&export_catalog(&catalog)).unwrap();
        assert_eq!(a, b);
        let export = export_catalog(&catalog);
        assert_eq!(export.families.len(), 20);
        assert!(export.families.iter().all(|f| f.claims.len() == 3));
    }

    #[test]
    fn export_renders_family_one() {
        let catalog = Catalog::standard();
        let export = export_catalog(&catalog);
        let f1 = &export.families[0];
        assert_eq!(f1.id, 1);
        assert_eq!(f1.case, "A");
        assert_eq!(f1.params, ["lambda", "r", "w1", "w2"]);
        let json = serde_json::to_value(&f1.brackets).unwrap();
        assert_eq!(json["WZ"]["W"], "lambda");
        assert_eq!(json["YX"]["X"], "r");
        assert_eq!(json["YX"]["W"], "r*w1/lambda");
        assert_eq!(json["ZX"]["Z"], "0");
        let ak = &f1.claims[0];
        assert_eq!(ak.class, HermClass::AlmostKahler);
        assert_eq!(ak.outcome, "parametric");
        assert_eq!(ak.branches[0].params, ["lambda", "r", "w2"]);
        assert_eq!(ak.locus, ["w1"]);
    }

    #[test]
    fn export_marks_empty_claims_with_obstructions() {
        let catalog = Catalog::standard();
        let export = export_catalog(&catalog);
        let f15 = &export.families[14];
        assert_eq!(f15.id, 15);
        let ak = &f15.claims[0];
        assert_eq!(ak.outcome, "empty");
        assert_eq!(ak.obstruction.as_deref(), Some("alpha"));
        let i = &f15.claims[1];
        assert_eq!(i.outcome, "parametric");
        let k = &f15.claims[2];
        assert_eq!(k.outcome, "empty");
    }

    #[test]
    fn every_fault_changes_the_export() {
        let good = serde_json::to_string(&export_catalog(&Catalog::standard())).unwrap();
        for fault in crate::families::Fault::ALL {
            let bad =
                serde_json::to_string(&export_catalog(&Catalog::with_fault(fault))).unwrap();
            assert_ne!(good, bad, "fault {fault} should alter the export");
        }
    }
}
