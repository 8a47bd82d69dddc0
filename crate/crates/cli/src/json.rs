//! JSON encodings of domain values. Integers are numbers and non-integral
//! rationals are `"p/q"` strings; every top-level object carries `"schema": 1`.

use std::collections::BTreeSet;

use hdcoh::dirac::{ParamReport, WeightMultiset};
use hdcoh::verify::VerificationReport;
use hdcoh::{GenSet, IntPoly, Root, Weight, Q};
use serde_json::{json, Map, Value};

pub const SCHEMA: u32 = 1;

pub fn rational(q: &Q) -> Value {
    if q.is_integer() {
        json!(q.to_integer())
    } else {
        json!(q.to_string())
    }
}

pub fn weight(w: &Weight) -> Value {
    Value::Array(w.coords().iter().map(rational).collect())
}

pub fn weights<'a>(ws: impl IntoIterator<Item = &'a Weight>) -> Value {
    Value::Array(ws.into_iter().map(weight).collect())
}

pub fn genset(s: GenSet) -> Value {
    Value::Array(s.iter().map(|i| json!(i + 1)).collect())
}

pub fn root(r: &Root) -> Value {
    json!(r.coords())
}

pub fn poly(p: &IntPoly) -> Value {
    json!(p.coeffs())
}

pub fn multiset(m: &WeightMultiset) -> Value {
    Value::Array(m.iter().map(|(w, k)| json!({"weight": weight(w), "mult": k})).collect())
}

pub fn with_schema(mut body: Map<String, Value>) -> Value {
    body.insert("schema".into(), json!(SCHEMA));
    Value::Object(body)
}

pub fn params(p: &ParamReport) -> Value {
    json!({
        "regular": p.regular,
        "w_set": weights(&p.w_set),
        "hull_set": weights(&p.hull_set),
        "linkage_set": weights(&p.linkage_set),
        "mult_set": weights(&p.mult_set),
        "embed_set": weights(&p.embed_set),
        "mult_set_shifted": weights(&p.mult_set_shifted),
        "embed_set_shifted": weights(&p.embed_set_shifted),
        "flags": {
            "chain": p.chain_holds(),
            "geometric_equal": p.geometric_equal(),
            "algebraic_equal": p.algebraic_equal(),
            "mult_equals_embed": p.mult_equals_embed(),
        },
    })
}

fn named_sets(sets: &[(String, BTreeSet<Weight>)]) -> Value {
    Value::Object(sets.iter().map(|(k, s)| (k.clone(), weights(s))).collect())
}

pub fn report(r: &VerificationReport, timings: bool) -> Value {
    let stats: Map<String, Value> = r
        .stats
        .iter()
        .map(|(k, s)| (k.clone(), json!({"passed": s.passed, "failed": s.failed})))
        .collect();
    let failures: Vec<Value> = r
        .failures
        .iter()
        .map(|f| {
            json!({
                "system": f.system,
                "I": genset(f.parabolic),
                "lambda": weight(&f.lambda),
                "eta": f.eta.as_ref().map(weight),
                "check": f.theorem,
                "detail": f.detail,
                "sets": named_sets(&f.sets),
            })
        })
        .collect();
    let coverage: Vec<Value> = r
        .coverage
        .iter()
        .map(|c| {
            json!({
                "system": c.system,
                "weights": c.weights,
                "singular": c.singular,
                "non_integral": c.non_integral,
                "complete": c.complete(),
            })
        })
        .collect();
    let errors: Vec<Value> = r.system_errors.iter().map(|(s, e)| json!({"system": s, "error": e})).collect();
    let mut body = Map::new();
    body.insert("passed".into(), json!(r.passed()));
    body.insert("total_checks".into(), json!(r.total_checks()));
    body.insert("incomplete_coverage".into(), json!(r.incomplete_coverage()));
    body.insert("stats".into(), Value::Object(stats));
    body.insert("witnesses".into(), json!(r.witnesses));
    body.insert("coverage".into(), Value::Array(coverage));
    body.insert("system_errors".into(), Value::Array(errors));
    body.insert("failures".into(), Value::Array(failures));
    if timings {
        body.insert("timings_ns".into(), json!(r.timings));
    }
    with_schema(body)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(rational(&Q::new(3, 1)), json!(3));
        assert_eq!(rational(&Q::new(-1, 2)), json!("-1/2"));
        assert_eq!(weight(&"0,-3/2".parse().unwrap()), json!([0, "-3/2"]));
        assert_eq!(genset("1,3".parse().unwrap()), json!([1, 3]));
    }
}
