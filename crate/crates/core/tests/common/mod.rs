//! Single-field mutations of passing certificates. Each case names the
//! check that must fail.

use idxcert_core::certify::{
    base_leaf, build_index_prime, build_prime_power, from_json, realize, to_json,
    verify_certificate, verify_claim, Certificate, Claim, Mode, VerificationReport, CHECK_CITED,
    CHECK_CLAIM_DIM, CHECK_CLAIM_INDEX, CHECK_DEGREE_ZERO, CHECK_DISTINCT, CHECK_ELLIPTIC_DIM,
    CHECK_KLT, CHECK_PRODUCT_ARITY, CHECK_QUASI_HOMOGENEOUS, CHECK_WELL_FORMED,
};
use serde_json::{json, Value};

pub struct Case {
    pub name: &'static str,
    pub cert: Certificate,
    pub claim: Option<Claim>,
    pub mode: Mode,
    pub mutate: fn(&mut Value),
    pub expect: &'static str,
}

fn leaf(c: idxcert_core::wps::LogLeaf) -> Certificate {
    Certificate::WpsLeaf(c)
}

fn claim(dim: usize, index: u64) -> Option<Claim> {
    Some(Claim { dim, index })
}

pub fn cases() -> Vec<Case> {
    vec![
        Case {
            name: "weight of index-prime leaf",
            cert: leaf(build_index_prime(13).unwrap()),
            claim: None,
            mode: Mode::Strict,
            mutate: |v| v["weights"][0] = json!(3),
            expect: CHECK_QUASI_HOMOGENEOUS,
        },
        Case {
            name: "weights of P^2 scaled",
            cert: leaf(build_prime_power(2, 3).unwrap()),
            claim: None,
            mode: Mode::Strict,
            mutate: |v| v["weights"] = json!([2, 2, 2]),
            expect: CHECK_WELL_FORMED,
        },
        Case {
            name: "weights of family B leaf swapped",
            cert: leaf(build_index_prime(7).unwrap()),
            claim: None,
            mode: Mode::Strict,
            mutate: |v| v["weights"] = json!([2, 3, 1]),
            expect: CHECK_QUASI_HOMOGENEOUS,
        },
        Case {
            name: "b of H raised",
            cert: leaf(build_index_prime(13).unwrap()),
            claim: None,
            mode: Mode::Strict,
            mutate: |v| {
                let last = v["entries"].as_array().unwrap().len() - 1;
                v["entries"][last]["b"] = json!(14);
            },
            expect: CHECK_DEGREE_ZERO,
        },
        Case {
            name: "b of coordinate entry raised",
            cert: leaf(build_index_prime(13).unwrap()),
            claim: None,
            mode: Mode::Strict,
            mutate: |v| v["entries"][0]["b"] = json!(14),
            expect: CHECK_DEGREE_ZERO,
        },
        Case {
            name: "b of hyperplane arrangement lowered",
            cert: leaf(build_prime_power(2, 4).unwrap()),
            claim: None,
            mode: Mode::Strict,
            mutate: |v| v["entries"][1]["b"] = json!(2),
            expect: CHECK_DEGREE_ZERO,
        },
        Case {
            name: "b of P^1 point",
            cert: base_leaf(1, 6).unwrap(),
            claim: None,
            mode: Mode::Strict,
            mutate: |v| v["entries"][2]["b"] = json!(7),
            expect: CHECK_DEGREE_ZERO,
        },
        Case {
            name: "exponent of H lowered",
            cert: leaf(build_index_prime(13).unwrap()),
            claim: None,
            mode: Mode::Strict,
            mutate: |v| {
                let last = v["entries"].as_array().unwrap().len() - 1;
                let h = &mut v["entries"][last]["eq"];
                let t = h.as_array().unwrap().len() - 1;
                h[t]["e"][4] = json!(3);
            },
            expect: CHECK_QUASI_HOMOGENEOUS,
        },
        Case {
            name: "family C residual made reducible",
            cert: leaf(build_prime_power(3, 3).unwrap()),
            claim: None,
            mode: Mode::Strict,
            // x2^2 -> x2*x3 keeps the degree but factors x3*(x2 + x3)
            mutate: |v| {
                let h = &mut v["entries"][3]["eq"];
                for t in h.as_array_mut().unwrap() {
                    if t["e"] == json!([0, 0, 2, 0]) {
                        t["e"] = json!([0, 0, 1, 1]);
                    }
                }
            },
            expect: CHECK_KLT,
        },
        Case {
            name: "coordinate entry duplicated",
            cert: leaf(build_index_prime(13).unwrap()),
            claim: None,
            mode: Mode::Strict,
            mutate: |v| v["entries"][1]["eq"] = v["entries"][0]["eq"].clone(),
            expect: CHECK_DISTINCT,
        },
        Case {
            name: "P^1 point moved onto another",
            cert: base_leaf(1, 6).unwrap(),
            claim: None,
            mode: Mode::Strict,
            // x0 - x1 becomes x0, the point already carrying entry 0
            mutate: |v| v["entries"][1]["eq"] = json!([{"c": [1, 1], "e": [1, 0]}]),
            expect: CHECK_DISTINCT,
        },
        Case {
            name: "three lines made concurrent",
            cert: base_leaf(2, 18).unwrap(),
            claim: None,
            mode: Mode::Strict,
            // 2x - y + 5z becomes 2x - y + 3z, through (-1 : 1 : 1)
            mutate: |v| {
                for t in v["entries"][2]["eq"].as_array_mut().unwrap() {
                    if t["e"] == json!([0, 0, 1]) {
                        t["c"] = json!([3, 1]);
                    }
                }
            },
            expect: CHECK_KLT,
        },
        Case {
            name: "conic made reducible",
            cert: base_leaf(2, 10).unwrap(),
            claim: None,
            mode: Mode::Strict,
            // xz - y^2 becomes xz - xy
            mutate: |v| {
                for t in v["entries"][1]["eq"].as_array_mut().unwrap() {
                    if t["e"] == json!([0, 2, 0]) {
                        t["e"] = json!([1, 1, 0]);
                    }
                }
            },
            expect: CHECK_KLT,
        },
        Case {
            name: "strategy tag family A to family B",
            cert: leaf(build_index_prime(13).unwrap()),
            claim: None,
            mode: Mode::Strict,
            mutate: |v| v["strategy"] = json!("family_B"),
            expect: CHECK_KLT,
        },
        Case {
            name: "strategy tag family C to hyperplanes",
            cert: leaf(build_prime_power(3, 3).unwrap()),
            claim: None,
            mode: Mode::Strict,
            mutate: |v| v["strategy"] = json!("hyperplane_arrangement"),
            expect: CHECK_KLT,
        },
        Case {
            name: "strategy tag plane on a weighted space",
            cert: leaf(build_index_prime(5).unwrap()),
            claim: None,
            mode: Mode::Strict,
            mutate: |v| v["strategy"] = json!("plane_arrangement"),
            expect: CHECK_KLT,
        },
        Case {
            name: "elliptic padding dimension changed",
            cert: realize(5, 8).unwrap(),
            claim: claim(4, 8),
            mode: Mode::Strict,
            mutate: |v| {
                let fs = v["factors"].as_array_mut().unwrap();
                let last = fs.len() - 1;
                fs[last]["dim"] = json!(2);
            },
            expect: CHECK_CLAIM_DIM,
        },
        Case {
            name: "elliptic dimension zero",
            cert: realize(3, 6).unwrap(),
            claim: claim(2, 6),
            mode: Mode::Strict,
            mutate: |v| v["factors"][1]["dim"] = json!(0),
            expect: CHECK_ELLIPTIC_DIM,
        },
        Case {
            name: "product child replaced",
            cert: realize(4, 15).unwrap(),
            claim: claim(3, 15),
            mode: Mode::Strict,
            mutate: |v| v["factors"][0] = to_json(&base_leaf(1, 4).unwrap(), None),
            expect: CHECK_CLAIM_INDEX,
        },
        Case {
            name: "product child dropped",
            cert: realize(4, 15).unwrap(),
            claim: claim(3, 15),
            mode: Mode::Strict,
            mutate: |v| {
                v["factors"].as_array_mut().unwrap().pop();
            },
            expect: CHECK_PRODUCT_ARITY,
        },
        Case {
            name: "product child turned into a citation",
            cert: realize(4, 15).unwrap(),
            claim: claim(3, 15),
            mode: Mode::Strict,
            mutate: |v| {
                v["factors"][0] =
                    json!({"node": "cited_leaf", "dim": 1, "index": 3, "cite": "trust me"})
            },
            expect: CHECK_CITED,
        },
        Case {
            name: "cited index changed",
            cert: realize(3, 14).unwrap(),
            claim: claim(2, 14),
            mode: Mode::Trusting,
            mutate: |v| v["index"] = json!(15),
            expect: CHECK_CLAIM_INDEX,
        },
        Case {
            name: "claimed index changed",
            cert: realize(6, 13).unwrap(),
            claim: claim(5, 13),
            mode: Mode::Strict,
            mutate: |v| v["claim"]["index"] = json!(26),
            expect: CHECK_CLAIM_INDEX,
        },
        Case {
            name: "claimed dimension changed",
            cert: realize(6, 13).unwrap(),
            claim: claim(5, 13),
            mode: Mode::Strict,
            mutate: |v| v["claim"]["dim"] = json!(4),
            expect: CHECK_CLAIM_DIM,
        },
        Case {
            name: "nested leaf b changed",
            cert: realize(6, 13).unwrap(),
            claim: claim(5, 13),
            mode: Mode::Strict,
            mutate: |v| v["factors"][0]["entries"][0]["b"] = json!(14),
            expect: CHECK_DEGREE_ZERO,
        },
    ]
}

impl Case {
    pub fn verify(&self, cert: &Certificate, claim: Option<Claim>) -> VerificationReport {
        match claim {
            Some(cl) => verify_claim(cert, self.mode, &cl),
            None => verify_certificate(cert, self.mode),
        }
    }

    /// `Err` with a reason unless the original passes and the mutation
    /// parses, changes the document and fails at `expect`.
    pub fn run(&self) -> Result<(), String> {
        let original = self.verify(&self.cert, self.claim);
        if !original.passed {
            return Err(format!(
                "{}: untampered certificate fails {:?}",
                self.name,
                original.failed_steps()
            ));
        }
        let mut v = to_json(&self.cert, self.claim);
        (self.mutate)(&mut v);
        let doc = from_json(&v)
            .map_err(|e| format!("{}: mutated file does not parse: {e}", self.name))?;
        if doc.cert == self.cert && doc.claim == self.claim {
            return Err(format!("{}: mutation had no effect", self.name));
        }
        let r = self.verify(&doc.cert, doc.claim);
        let failed = r.failed_steps();
        if r.passed || !failed.contains(&self.expect) {
            return Err(format!(
                "{}: expected {} among {failed:?}",
                self.name, self.expect
            ));
        }
        Ok(())
    }
}
