//! Series addressed by name, as used on the command line.

use crate::error::{Error, Result};
use crate::forms;
use crate::mock::{self, MockLabel, MockSeries};
use crate::series::QSeries;

/// Every accepted name; `<m>`, `<t>`, `<i>,<j>` are non-negative integers.
pub const NAMES: &[&str] = &[
    "eta",
    "theta2",
    "theta3",
    "theta4",
    "vtheta2",
    "vtheta3",
    "vtheta4",
    "E2",
    "E4",
    "E6",
    "Estar",
    "Eodd",
    "Delta",
    "A",
    "B",
    "A38",
    "A78",
    "h",
    "fm:<m>",
    "Ft:<t>",
    "calFt:<t>",
    "M",
    "Qplus",
    "QcalQ",
    "QtransS",
    "rho4",
    "ebracket:<i>,<j>",
];

fn parse_u32(name: &str, s: &str) -> Result<u32> {
    s.trim().parse().map_err(|_| Error::UnknownForm(name.to_string()))
}

/// Builds the series called `name`, known below `q^order`.
pub fn named_series(name: &str, order: i64) -> Result<QSeries> {
    let theta = |w| forms::theta_big(w, order);
    let vtheta = |w| forms::vartheta(w, order);
    let mock = |label| MockSeries::build(label, order).map(|m| m.series);
    if let Some((head, arg)) = name.split_once(':') {
        return match head {
            "fm" => Ok(forms::form_fm(parse_u32(name, arg)?, order)),
            "Ft" => mock(MockLabel::Ft(parse_u32(name, arg)?)),
            "calFt" => mock(MockLabel::CalFt(parse_u32(name, arg)?)),
            "ebracket" => {
                let (i, j) = arg.split_once(',').ok_or_else(|| Error::UnknownForm(name.to_string()))?;
                mock::e_bracket(parse_u32(name, i)?, parse_u32(name, j)?, order)
            }
            _ => Err(Error::UnknownForm(name.to_string())),
        };
    }
    match name {
        "eta" => Ok(forms::eta(order)),
        "theta2" => theta(2),
        "theta3" => theta(3),
        "theta4" => theta(4),
        "vtheta2" => vtheta(2),
        "vtheta3" => vtheta(3),
        "vtheta4" => vtheta(4),
        "E2" => Ok(forms::eisenstein_e2(order)),
        "E4" => Ok(forms::eisenstein_e4(order)),
        "E6" => Ok(forms::eisenstein_e6(order)),
        "Estar" => Ok(forms::eisenstein_estar(order)),
        "Eodd" => Ok(forms::eisenstein_eodd(order)),
        "Delta" => Ok(forms::delta(order)),
        "A" => Ok(forms::form_a(order)),
        "B" => Ok(forms::form_b(order)),
        "A38" => Ok(forms::form_a38(order)),
        "A78" => Ok(forms::form_a78(order)),
        "h" => Ok(forms::form_h(order)),
        "M" => mock(MockLabel::M),
        "Qplus" => mock(MockLabel::QPlus),
        "QcalQ" => mock(MockLabel::CalQ),
        "QtransS" => mock(MockLabel::QTransformS),
        "rho4" => Ok(mock::rho4(order)),
        _ => Err(Error::UnknownForm(name.to_string())),
    }
}
