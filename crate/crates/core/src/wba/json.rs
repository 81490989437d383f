//! Deterministic JSON emission and loading for [`BasedWBA`].
//!
//! Basis order, table order and key order are all fixed, so emitting the
//! same object twice is byte-identical, and `load(emit(x))` is the identity.

use serde::{Deserialize, Serialize};

use crate::exactfield::{CycloField, Scalar};
use crate::wba::{AlgebraError, BasedWBA, BasisId, Element, WbaBuilder};

#[derive(Serialize, Deserialize)]
struct DeltaTermRepr {
    left: BasisId,
    right: BasisId,
    coeff: Scalar,
}

#[derive(Serialize, Deserialize)]
struct WbaRepr {
    name: String,
    conductor: u64,
    window: [i32; 2],
    unbounded: [bool; 2],
    basis: Vec<(BasisId, String)>,
    unit: Element,
    mul: Vec<(BasisId, BasisId, Element)>,
    mul_overflow: Vec<(BasisId, BasisId)>,
    delta: Vec<(BasisId, Vec<DeltaTermRepr>)>,
    counit: Vec<(BasisId, Scalar)>,
}

pub fn emit(h: &BasedWBA) -> String {
    let (labels, unit, mul, overflow, delta, counit) = h.raw_tables();
    let repr = WbaRepr {
        name: h.name().to_string(),
        conductor: h.field().conductor(),
        window: [h.window().0, h.window().1],
        unbounded: [h.is_unbounded_above(), h.is_unbounded_below()],
        basis: labels.iter().map(|(id, l)| (*id, l.clone())).collect(),
        unit: unit.clone(),
        mul: mul
            .iter()
            .map(|((a, b), v)| (*a, *b, v.clone()))
            .collect(),
        mul_overflow: overflow.iter().copied().collect(),
        delta: delta
            .iter()
            .map(|(a, t)| {
                let terms = t
                    .terms()
                    .map(|((l, r), c)| DeltaTermRepr {
                        left: *l,
                        right: *r,
                        coeff: c.clone(),
                    })
                    .collect();
                (*a, terms)
            })
            .collect(),
        counit: counit.iter().map(|(a, c)| (*a, c.clone())).collect(),
    };
    serde_json::to_string_pretty(&repr).expect("serialization cannot fail")
}

pub fn load(json: &str) -> Result<BasedWBA, AlgebraError> {
    let repr: WbaRepr =
        serde_json::from_str(json).map_err(|e| AlgebraError::BadStructure(e.to_string()))?;
    let field = CycloField::new(repr.conductor)
        .map_err(|e| AlgebraError::BadStructure(e.to_string()))?;
    let mut builder = WbaBuilder::new(repr.name, &field).window(
        repr.window[0],
        repr.window[1],
        repr.unbounded[0],
        repr.unbounded[1],
    );
    for (id, label) in repr.basis {
        builder.basis(id, label);
    }
    builder.unit(repr.unit);
    for (a, b, v) in repr.mul {
        builder.product(a, b, v);
    }
    for (a, b) in repr.mul_overflow {
        builder.product_overflow(a, b);
    }
    for (a, terms) in repr.delta {
        let mut t = crate::wba::PairTensor::zero();
        for term in terms {
            t.add_term(term.left, term.right, term.coeff);
        }
        builder.coproduct(a, t);
    }
    for (a, c) in repr.counit {
        builder.counit(a, c);
    }
    builder.build()
}
