//! Exact rationals and their JSON form `{"num": n, "den": d}`.

use num_rational::Ratio;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::Serializer;

pub type Rational = Ratio<i64>;

pub fn serialize_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    let mut st = s.serialize_struct("Rational", 2)?;
    st.serialize_field("num", r.numer())?;
    st.serialize_field("den", r.denom())?;
    st.end()
}

pub fn serialize_rationals<S: Serializer>(rs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    struct One<'a>(&'a Rational);
    impl serde::Serialize for One<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            serialize_rational(self.0, s)
        }
    }
    let mut seq = s.serialize_seq(Some(rs.len()))?;
    for r in rs {
        seq.serialize_element(&One(r))?;
    }
    seq.end()
}

/// Wrapper that serializes a rational in the `{"num", "den"}` form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalJson(pub Rational);

impl serde::Serialize for RationalJson {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize_rational(&self.0, s)
    }
}

/// `a/b` rendered without a denominator when it is 1.
pub fn display(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(RationalJson(Rational::new(-6, 4))).unwrap();
        assert_eq!(v, serde_json::json!({"num": -3, "den": 2}));
        assert_eq!(display(&Rational::new(4, 2)), "2");
        assert_eq!(display(&Rational::new(-1, 3)), "-1/3");
    }
}
