//! Graded free modules over the total Witt ring of the base, modeled as
//! finite multisets of generators. Each generator carries an exact integer
//! degree (the 4-periodic residue is derived), a twist class and a
//! provenance tag.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagram::StrictPartition;
use crate::enumeration::DiagramSet;
use crate::twist::{twist_add, DegreeClass, TwistClass};

/// Where a generator came from: the diagram indexing it, or the label of the
/// derivation step that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    Diagram(StrictPartition),
    Label(String),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Diagram(p) => {
                write!(f, "[")?;
                for (i, part) in p.parts().iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{part}")?;
                }
                write!(f, "]")
            }
            Provenance::Label(label) => f.write_str(label),
        }
    }
}

impl Provenance {
    fn parse(text: &str) -> Result<Self, String> {
        if text.starts_with('[') {
            let parts: Vec<i64> = serde_json::from_str(text)
                .map_err(|e| format!("bad diagram provenance {text:?}: {e}"))?;
            let partition = StrictPartition::new(&parts)
                .map_err(|e| format!("bad diagram provenance {text:?}: {e}"))?;
            Ok(Provenance::Diagram(partition))
        } else {
            Ok(Provenance::Label(text.to_string()))
        }
    }
}

/// One free summand: a copy of the base ring shifted into `degree` and
/// twisted by `twist`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub degree: DegreeClass,
    pub twist: TwistClass,
    pub provenance: Provenance,
}

impl Serialize for Generator {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut record = serializer.serialize_struct("Generator", 4)?;
        record.serialize_field("degree", &self.degree.degree())?;
        record.serialize_field("residue", &self.degree.residue())?;
        record.serialize_field("twist", &self.twist)?;
        record.serialize_field("provenance", &self.provenance.to_string())?;
        record.end()
    }
}

impl<'de> Deserialize<'de> for Generator {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Record {
            degree: i64,
            residue: u8,
            twist: TwistClass,
            provenance: String,
        }
        let record = Record::deserialize(deserializer)?;
        let degree = DegreeClass::new(record.degree);
        if degree.residue() != record.residue {
            return Err(D::Error::custom(format!(
                "stated residue {} does not match degree {}",
                record.residue, record.degree
            )));
        }
        Ok(Generator {
            degree,
            twist: record.twist,
            provenance: Provenance::parse(&record.provenance).map_err(D::Error::custom)?,
        })
    }
}

/// Finite multiset of generators; the empty multiset is the zero module.
/// Generators are kept canonically sorted, so equality is multiset equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedWittModule {
    generators: Vec<Generator>,
}

impl GradedWittModule {
    pub fn zero() -> Self {
        GradedWittModule::default()
    }

    pub fn from_generators(mut generators: Vec<Generator>) -> Self {
        generators.sort_unstable();
        GradedWittModule { generators }
    }

    /// One generator per diagram: degree is the box count, twist is trivial.
    pub fn from_diagrams(set: &DiagramSet) -> Self {
        let generators = set
            .iter()
            .map(|p| Generator {
                degree: DegreeClass::new(p.weight() as i64),
                twist: TwistClass::TRIVIAL,
                provenance: Provenance::Diagram(p.clone()),
            })
            .collect();
        Self::from_generators(generators)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn rank(&self) -> u64 {
        self.generators.len() as u64
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Shifts every degree by d and adds t to every twist.
    pub fn shift(&self, d: i64, t: TwistClass) -> Self {
        let generators = self
            .generators
            .iter()
            .map(|g| Generator {
                degree: g.degree.shifted(d),
                twist: twist_add(g.twist, t),
                provenance: g.provenance.clone(),
            })
            .collect();
        Self::from_generators(generators)
    }

    /// Multiset union; ranks add.
    pub fn direct_sum(&self, other: &GradedWittModule) -> Self {
        let mut generators = self.generators.clone();
        generators.extend(other.generators.iter().cloned());
        Self::from_generators(generators)
    }

    /// Generator counts keyed by (degree residue mod 4, twist); absent keys
    /// mean rank zero.
    pub fn rank_table(&self) -> BTreeMap<(u8, TwistClass), u64> {
        let mut table = BTreeMap::new();
        for g in &self.generators {
            *table.entry((g.degree.residue(), g.twist)).or_insert(0) += 1;
        }
        table
    }

    /// The sub-multiset of generators whose twist is exactly t.
    pub fn twisted_component(&self, t: TwistClass) -> Self {
        GradedWittModule {
            generators: self
                .generators
                .iter()
                .filter(|g| g.twist == t)
                .cloned()
                .collect(),
        }
    }

    /// The (degree, twist) multiset, sorted; provenance is ignored. This is
    /// the shape two modules are compared by.
    pub fn degree_twist_multiset(&self) -> Vec<(i64, TwistClass)> {
        let mut shape: Vec<(i64, TwistClass)> = self
            .generators
            .iter()
            .map(|g| (g.degree.degree(), g.twist))
            .collect();
        shape.sort_unstable();
        shape
    }
}

impl Serialize for GradedWittModule {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.generators.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GradedWittModule {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let generators = Vec::<Generator>::deserialize(deserializer)?;
        Ok(GradedWittModule::from_generators(generators))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{count, recursive_enumerate};
    use crate::twist::LineBundleSymbol;

    fn n7_module() -> GradedWittModule {
        GradedWittModule::from_diagrams(&recursive_enumerate(7))
    }

    #[test]
    fn from_diagrams_gives_one_trivially_twisted_generator_per_weight() {
        let m = n7_module();
        assert_eq!(m.rank(), 8);
        let degrees: Vec<i64> = m.generators().iter().map(|g| g.degree.degree()).collect();
        assert_eq!(degrees, vec![0, 3, 7, 10, 11, 14, 18, 21]);
        assert!(m.generators().iter().all(|g| g.twist.is_trivial()));
        let m1 = GradedWittModule::from_diagrams(&recursive_enumerate(1));
        assert_eq!(m1.rank(), 1);
        assert_eq!(m1.generators()[0].degree.degree(), 0);
        assert!(GradedWittModule::zero().is_zero());
    }

    #[test]
    fn from_diagrams_rank_matches_the_counting_law() {
        for n in 1..=20 {
            let m = GradedWittModule::from_diagrams(&recursive_enumerate(n));
            assert_eq!(m.rank(), count(n), "n = {n}");
        }
    }

    #[test]
    fn shift_moves_degrees_and_adds_twists() {
        let m = n7_module();
        assert_eq!(m.shift(0, TwistClass::TRIVIAL), m);
        let single = GradedWittModule::from_generators(vec![Generator {
            degree: DegreeClass::new(0),
            twist: TwistClass::TRIVIAL,
            provenance: Provenance::Label("BaseCase".to_string()),
        }]);
        let shifted = single.shift(11, TwistClass::TRIVIAL);
        assert_eq!(shifted.generators()[0].degree.degree(), 11);
        let t = TwistClass::singleton(LineBundleSymbol::DetEnTilde);
        assert_eq!(m.shift(3, t).shift(4, t), m.shift(7, TwistClass::TRIVIAL));
    }

    #[test]
    fn shift_preserves_rank() {
        let m = n7_module();
        let t = TwistClass::singleton(LineBundleSymbol::O1);
        assert_eq!(m.shift(-5, t).rank(), m.rank());
    }

    #[test]
    fn direct_sum_is_a_commutative_multiset_union() {
        let a = n7_module();
        let b = GradedWittModule::from_diagrams(&recursive_enumerate(5));
        assert_eq!(a.direct_sum(&GradedWittModule::zero()), a);
        assert_eq!(a.direct_sum(&b).rank(), a.rank() + b.rank());
        assert_eq!(a.direct_sum(&b), b.direct_sum(&a));
        let c = GradedWittModule::from_diagrams(&recursive_enumerate(3));
        assert_eq!(
            a.direct_sum(&b).direct_sum(&c),
            a.direct_sum(&b.direct_sum(&c))
        );
    }

    #[test]
    fn the_even_split_shape_reproduces_n7_from_n5() {
        // The n = 7 family is the n = 5 family shifted by 11 plus the n = 5
        // family embedded unchanged.
        let m5 = GradedWittModule::from_diagrams(&recursive_enumerate(5));
        let lhs = n7_module();
        let rhs = m5.shift(11, TwistClass::TRIVIAL).direct_sum(&m5);
        assert_eq!(lhs.degree_twist_multiset(), rhs.degree_twist_multiset());
    }

    #[test]
    fn rank_table_for_n7_splits_one_one_three_three() {
        let table = n7_module().rank_table();
        let trivial = TwistClass::TRIVIAL;
        assert_eq!(table.get(&(0, trivial)), Some(&1));
        assert_eq!(table.get(&(1, trivial)), Some(&1));
        assert_eq!(table.get(&(2, trivial)), Some(&3));
        assert_eq!(table.get(&(3, trivial)), Some(&3));
        assert_eq!(table.len(), 4);
        assert!(GradedWittModule::zero().rank_table().is_empty());
    }

    #[test]
    fn rank_table_sums_to_total_rank() {
        for n in 1..=12 {
            let m = GradedWittModule::from_diagrams(&recursive_enumerate(n));
            let total: u64 = m.rank_table().values().sum();
            assert_eq!(total, m.rank(), "n = {n}");
        }
    }

    #[test]
    fn twisted_component_selects_exact_twists() {
        let m = n7_module();
        assert!(m
            .twisted_component(TwistClass::singleton(LineBundleSymbol::O1))
            .is_zero());
        assert_eq!(m.twisted_component(TwistClass::TRIVIAL), m);
        let t = TwistClass::singleton(LineBundleSymbol::BaseL);
        assert!(m.twisted_component(t).is_zero());
        let mixed = m.shift(0, t).direct_sum(&m);
        assert_eq!(mixed.twisted_component(t).rank(), 8);
        assert_eq!(mixed.twisted_component(TwistClass::TRIVIAL).rank(), 8);
    }

    #[test]
    fn module_json_round_trips() {
        let m = n7_module();
        let json = serde_json::to_string(&m).unwrap();
        let back: GradedWittModule = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
        assert!(json.starts_with(r#"[{"degree":0,"residue":0,"twist":[],"provenance":"[]"}"#));
        assert!(json.contains(r#"{"degree":11,"residue":3,"twist":[],"provenance":"[6,5]"}"#));
    }

    #[test]
    fn generator_json_rejects_inconsistent_residues() {
        assert!(serde_json::from_str::<Generator>(
            r#"{"degree":11,"residue":2,"twist":[],"provenance":"[6,5]"}"#
        )
        .is_err());
        let g: Generator =
            serde_json::from_str(r#"{"degree":11,"residue":3,"twist":[],"provenance":"BaseCase"}"#)
                .unwrap();
        assert_eq!(g.provenance, Provenance::Label("BaseCase".to_string()));
    }
}
