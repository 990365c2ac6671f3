use std::sync::atomic::{AtomicI64, AtomicUsize, Ordering};
use std::sync::Once;

/// Resource limits for Gröbner computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest total degree of a basis element.
    pub max_degree: i64,
    /// Largest term count of an intermediate polynomial, and largest basis size.
    pub max_terms: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_degree: 64, max_terms: 20_000 }
    }
}

static MAX_DEGREE: AtomicI64 = AtomicI64::new(64);
static MAX_TERMS: AtomicUsize = AtomicUsize::new(20_000);
static ENV_INIT: Once = Once::new();

impl Caps {
    /// Parses `deg=N,terms=M` (either key optional) or `N,M`.
    pub fn parse(s: &str) -> Result<Caps, String> {
        let mut caps = Caps::default();
        let parts: Vec<&str> = s.split(',').map(str::trim).filter(|p| !p.is_empty()).collect();
        for (i, part) in parts.iter().enumerate() {
            let (key, val) = match part.split_once('=') {
                Some((k, v)) => (k.trim(), v.trim()),
                None => (if i == 0 { "deg" } else { "terms" }, *part),
            };
            match key {
                "deg" | "degree" => caps.max_degree = val.parse().map_err(|_| format!("bad degree cap `{val}`"))?,
                "terms" => caps.max_terms = val.parse().map_err(|_| format!("bad term cap `{val}`"))?,
                _ => return Err(format!("unknown cap `{key}`")),
            }
        }
        if caps.max_degree < 1 || caps.max_terms < 1 {
            return Err("caps must be positive".into());
        }
        Ok(caps)
    }

    /// Process-wide caps, initialized from `UFDLAB_CAPS` on first use.
    pub fn current() -> Caps {
        ENV_INIT.call_once(|| {
            if let Ok(s) = std::env::var("UFDLAB_CAPS") {
                if let Ok(c) = Caps::parse(&s) {
                    MAX_DEGREE.store(c.max_degree, Ordering::Relaxed);
                    MAX_TERMS.store(c.max_terms, Ordering::Relaxed);
                }
            }
        });
        Caps { max_degree: MAX_DEGREE.load(Ordering::Relaxed), max_terms: MAX_TERMS.load(Ordering::Relaxed) }
    }

    /// Replaces the process-wide caps.
    pub fn set_current(caps: Caps) {
        ENV_INIT.call_once(|| {});
        MAX_DEGREE.store(caps.max_degree, Ordering::Relaxed);
        MAX_TERMS.store(caps.max_terms, Ordering::Relaxed);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(Caps::parse("deg=10,terms=99").unwrap(), Caps { max_degree: 10, max_terms: 99 });
        assert_eq!(Caps::parse("12, 500").unwrap(), Caps { max_degree: 12, max_terms: 500 });
        assert_eq!(Caps::parse("terms=7").unwrap(), Caps { max_degree: 64, max_terms: 7 });
        assert!(Caps::parse("deg=0").is_err());
        assert!(Caps::parse("speed=3").is_err());
    }
}
