//! Number rendering shared by every CSV artifact: comma separated, LF line
//! endings, `.` decimal separator, 17 significant digits (lossless for f64).

use crate::error::{domain, Result};

/// Renders `x` with 17 significant digits in scientific notation.
pub fn format_real(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn parse_real(field: &str) -> Result<f64> {
    field
        .trim()
        .parse::<f64>()
        .map_err(|e| domain("csv", format!("cannot parse {field:?} as a number: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn renders_seventeen_digits() {
        assert_eq!(format_real(1.5), "1.5000000000000000e0");
        assert_eq!(format_real(1.4), "1.3999999999999999e0");
        assert_eq!(format_real(0.1 + 0.2), "3.0000000000000004e-1");
        assert_eq!(format_real(-2.5e-300), "-2.5000000000000000e-300");
    }

    proptest! {
        #[test]
        fn round_trips(x in any::<f64>().prop_filter("finite", |x| x.is_finite())) {
            prop_assert_eq!(parse_real(&format_real(x)).unwrap().to_bits(), x.to_bits());
        }
    }
}
