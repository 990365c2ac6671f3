/// Runs `$body` with `$F` bound to the coefficient field called `$name`.
macro_rules! with_field {
    ($name:expr, $F:ident => $body:expr) => {{
        match $name {
            "QQ" => {
                type $F = ufdlab::Q;
                $body
            }
            "F2" => {
                type $F = ufdlab::F2;
                $body
            }
            "F3" => {
                type $F = ufdlab::F3;
                $body
            }
            "F5" => {
                type $F = ufdlab::F5;
                $body
            }
            "F7" => {
                type $F = ufdlab::F7;
                $body
            }
            "F11" => {
                type $F = ufdlab::F11;
                $body
            }
            "F101" => {
                type $F = ufdlab::F101;
                $body
            }
            "F32003" => {
                type $F = ufdlab::F32003;
                $body
            }
            other => Err($crate::runner::ClaimError::Params(format!(
                "unknown field `{other}`; expected one of {}",
                $crate::fields::FIELD_NAMES.join(", ")
            ))),
        }
    }};
}

pub(crate) const FIELD_NAMES: [&str; 8] = ["QQ", "F2", "F3", "F5", "F7", "F11", "F101", "F32003"];
