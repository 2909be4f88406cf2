//! Input geometry for the two video feature front-ends.
//!
//! The full-body extractor consumes 64-frame windows at stride 8 on frames
//! that were padded with a gray border (20% left and right, 7.5% top and
//! bottom) and rescaled to 224×224; it emits one 1024-dimensional vector per
//! window. The mouth extractor consumes 96×96 face crops and emits one
//! 768-dimensional vector per frame.
//!
//! Only the arithmetic lives here. Decoding, cropping and inference belong
//! to whatever consumes the plan.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const FULL_BODY_FEATURE_DIM: usize = 1024;
pub const MOUTH_FEATURE_DIM: usize = 768;
pub const MOUTH_CROP: u32 = 96;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PadFill {
    #[default]
    Gray,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PadSpec {
    pub left_frac: f64,
    pub right_frac: f64,
    pub top_frac: f64,
    pub bottom_frac: f64,
    pub target_w: u32,
    pub target_h: u32,
    pub fill: PadFill,
}

impl Default for PadSpec {
    fn default() -> Self {
        PadSpec {
            left_frac: 0.20,
            right_frac: 0.20,
            top_frac: 0.075,
            bottom_frac: 0.075,
            target_w: 224,
            target_h: 224,
            fill: PadFill::Gray,
        }
    }
}

impl PadSpec {
    pub fn no_padding(target_w: u32, target_h: u32) -> Self {
        PadSpec {
            left_frac: 0.0,
            right_frac: 0.0,
            top_frac: 0.0,
            bottom_frac: 0.0,
            target_w,
            target_h,
            fill: PadFill::Gray,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fracs = [self.left_frac, self.right_frac, self.top_frac, self.bottom_frac];
        if fracs.iter().any(|f| !f.is_finite() || *f < 0.0) {
            return Err(Error::Config(
                "padding fractions must be finite and non-negative".into(),
            ));
        }
        if self.target_w == 0 || self.target_h == 0 {
            return Err(Error::Config("target resolution must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PaddingPlan {
    pub padded_w: u32,
    pub padded_h: u32,
    pub scale_x: f64,
    pub scale_y: f64,
}

// Fractions like 0.075 are not exact in binary; snap away the float noise
// before rounding half away from zero.
fn padded_extent(size: u32, frac_sum: f64) -> u32 {
    let exact = f64::from(size) * (1.0 + frac_sum);
    let snapped = (exact * 1e9).round() / 1e9;
    snapped.round() as u32
}

/// Padded frame size and the scale factors that map it onto the target
/// resolution.
pub fn plan_padding(width: u32, height: u32, spec: &PadSpec) -> Result<PaddingPlan> {
    spec.validate()?;
    if width == 0 || height == 0 {
        return Err(Error::Config(format!(
            "frame size must be positive, got {width}x{height}"
        )));
    }
    let padded_w = padded_extent(width, spec.left_frac + spec.right_frac);
    let padded_h = padded_extent(height, spec.top_frac + spec.bottom_frac);
    Ok(PaddingPlan {
        padded_w,
        padded_h,
        scale_x: f64::from(spec.target_w) / f64::from(padded_w),
        scale_y: f64::from(spec.target_h) / f64::from(padded_h),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowSpec {
    pub window: usize,
    pub stride: usize,
}

impl Default for WindowSpec {
    fn default() -> Self {
        WindowSpec { window: 64, stride: 8 }
    }
}

impl WindowSpec {
    pub fn new(window: usize, stride: usize) -> Result<Self> {
        let spec = WindowSpec { window, stride };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.window == 0 || self.stride == 0 || self.stride > self.window {
            return Err(Error::Config(format!(
                "need window >= 1 and 1 <= stride <= window, got window {} stride {}",
                self.window, self.stride
            )));
        }
        Ok(())
    }
}

/// Temporal windows over one clip.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowPlan {
    pub frame_count: usize,
    pub window: usize,
    pub stride: usize,
    pub window_starts: Vec<usize>,
    /// Frames appended by repeating the last frame (short clips only).
    pub tail_padding: usize,
    pub feature_dim: usize,
}

impl WindowPlan {
    pub fn num_windows(&self) -> usize {
        self.window_starts.len()
    }
}

/// Window starts `0, stride, 2*stride, ...` that fit inside the clip. A clip
/// shorter than one window still gets a single window, padded by repeating
/// its last frame; an empty clip gets none.
pub fn plan_windows(frame_count: usize, spec: &WindowSpec) -> Result<WindowPlan> {
    spec.validate()?;
    let (window_starts, tail_padding) = if frame_count == 0 {
        (Vec::new(), 0)
    } else if frame_count < spec.window {
        (vec![0], spec.window - frame_count)
    } else {
        let n = (frame_count - spec.window) / spec.stride + 1;
        ((0..n).map(|i| i * spec.stride).collect(), 0)
    };
    Ok(WindowPlan {
        frame_count,
        window: spec.window,
        stride: spec.stride,
        window_starts,
        tail_padding,
        feature_dim: FULL_BODY_FEATURE_DIM,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MouthPlan {
    pub crop_w: u32,
    pub crop_h: u32,
    pub feature_dim: usize,
    pub sequence_len: usize,
}

/// One mouth feature per frame.
pub fn plan_mouth(frame_count: usize) -> MouthPlan {
    MouthPlan {
        crop_w: MOUTH_CROP,
        crop_h: MOUTH_CROP,
        feature_dim: MOUTH_FEATURE_DIM,
        sequence_len: frame_count,
    }
}

/// One line of a `plan` manifest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClipEntry {
    pub id: String,
    pub frame_count: usize,
    pub width: u32,
    pub height: u32,
}

/// Everything an extractor needs for one clip.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClipPlan {
    pub id: String,
    pub width: u32,
    pub height: u32,
    pub padded_w: u32,
    pub padded_h: u32,
    pub scale_x: f64,
    pub scale_y: f64,
    pub target_w: u32,
    pub target_h: u32,
    #[serde(flatten)]
    pub windows: WindowPlan,
    pub mouth: MouthPlan,
}

pub fn plan_clip(entry: &ClipEntry, pad: &PadSpec, windows: &WindowSpec) -> Result<ClipPlan> {
    let padding = plan_padding(entry.width, entry.height, pad)?;
    Ok(ClipPlan {
        id: entry.id.clone(),
        width: entry.width,
        height: entry.height,
        padded_w: padding.padded_w,
        padded_h: padding.padded_h,
        scale_x: padding.scale_x,
        scale_y: padding.scale_y,
        target_w: pad.target_w,
        target_h: pad.target_h,
        windows: plan_windows(entry.frame_count, windows)?,
        mouth: plan_mouth(entry.frame_count),
    })
}

/// Parses a JSONL manifest of [`ClipEntry`] lines. Blank lines are skipped.
pub fn parse_manifest(text: &str) -> Result<Vec<ClipEntry>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l).map_err(|e| Error::MalformedLine {
                line: i + 1,
                message: e.to_string(),
            })
        })
        .collect()
}
