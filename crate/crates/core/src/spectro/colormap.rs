use crate::error::{CoreError, Result};

#[path = "colormap_data.rs"]
mod data;

/// Colorization palette for rendered spectrograms. Each variant is backed by
/// an embedded 256-entry RGB table; values between table entries are linearly
/// interpolated so the mapping is continuous on [0, 1].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Colormap {
    Viridis,
    Plasma,
    Inferno,
    Magma,
    Cividis,
    Gray,
    Hot,
}

impl Colormap {
    pub const ALL: [Colormap; 7] = [
        Colormap::Viridis,
        Colormap::Plasma,
        Colormap::Inferno,
        Colormap::Magma,
        Colormap::Cividis,
        Colormap::Gray,
        Colormap::Hot,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Colormap::Viridis => "viridis",
            Colormap::Plasma => "plasma",
            Colormap::Inferno => "inferno",
            Colormap::Magma => "magma",
            Colormap::Cividis => "cividis",
            Colormap::Gray => "gray",
            Colormap::Hot => "hot",
        }
    }

    fn table(self) -> &'static [[u8; 3]; 256] {
        match self {
            Colormap::Viridis => &data::VIRIDIS,
            Colormap::Plasma => &data::PLASMA,
            Colormap::Inferno => &data::INFERNO,
            Colormap::Magma => &data::MAGMA,
            Colormap::Cividis => &data::CIVIDIS,
            Colormap::Gray => &data::GRAY,
            Colormap::Hot => &data::HOT,
        }
    }

    /// Map a normalized value to RGB. Input is clamped to [0, 1]; NaN maps to
    /// the low end of the palette.
    pub fn lookup(self, value: f64) -> [u8; 3] {
        let v = if value.is_nan() { 0.0 } else { value.clamp(0.0, 1.0) };
        let pos = v * 255.0;
        let lo = pos.floor() as usize;
        let hi = (lo + 1).min(255);
        let frac = pos - lo as f64;
        let t = self.table();
        let mut rgb = [0u8; 3];
        for ch in 0..3 {
            let blended = t[lo][ch] as f64 * (1.0 - frac) + t[hi][ch] as f64 * frac;
            rgb[ch] = blended.round() as u8;
        }
        rgb
    }
}

impl std::str::FromStr for Colormap {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self> {
        Colormap::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s.to_ascii_lowercase())
            .ok_or_else(|| CoreError::UnknownColormap { name: s.into() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // First and last viridis table entries, 8-bit quantized, frozen from the
    // published colormap definition.
    const VIRIDIS_FIRST: [u8; 3] = [68, 1, 84];
    const VIRIDIS_LAST: [u8; 3] = [253, 231, 37];

    #[test]
    fn viridis_endpoints_match_published_table() {
        assert_eq!(Colormap::Viridis.lookup(0.0), VIRIDIS_FIRST);
        assert_eq!(Colormap::Viridis.lookup(1.0), VIRIDIS_LAST);
    }

    #[test]
    fn gray_is_an_identity_ramp() {
        for v in [0.0f64, 0.125, 0.5, 0.99, 1.0] {
            let expect = (v * 255.0).round() as u8;
            assert_eq!(Colormap::Gray.lookup(v), [expect; 3], "value {v}");
        }
    }

    #[test]
    fn out_of_range_values_clamp() {
        assert_eq!(Colormap::Viridis.lookup(-3.0), VIRIDIS_FIRST);
        assert_eq!(Colormap::Viridis.lookup(17.0), VIRIDIS_LAST);
        assert_eq!(Colormap::Viridis.lookup(f64::NAN), VIRIDIS_FIRST);
    }

    #[test]
    fn interpolation_is_monotone_between_entries() {
        // Between adjacent gray entries the blend is exact.
        let mid = Colormap::Gray.lookup(100.5 / 255.0);
        assert!(mid[0] == 100 || mid[0] == 101);
        // Slightly past an entry moves by at most one quantization step.
        let a = Colormap::Viridis.lookup(0.5);
        let b = Colormap::Viridis.lookup(0.5 + 1e-9);
        for ch in 0..3 {
            assert!(a[ch].abs_diff(b[ch]) <= 1);
        }
    }

    #[test]
    fn every_name_round_trips() {
        for cmap in Colormap::ALL {
            let parsed: Colormap = cmap.name().parse().unwrap();
            assert_eq!(parsed, cmap);
        }
        assert!("jett".parse::<Colormap>().is_err());
    }
}
