//! Window and padding plans for feature extraction.

use slt_core::frameplan::{plan_clip, plan_padding, plan_windows, ClipEntry, PadSpec, WindowSpec};

fn main() -> slt_core::Result<()> {
    let spec = WindowSpec::default();
    for frames in [0, 20, 64, 80, 250] {
        let plan = plan_windows(frames, &spec)?;
        println!(
            "{frames:>4} frames: {} windows, starts {:?}, tail padding {}",
            plan.num_windows(),
            plan.window_starts,
            plan.tail_padding
        );
    }

    println!();
    let pad = PadSpec::default();
    for (w, h) in [(1280, 720), (1920, 1080), (1000, 1000)] {
        let p = plan_padding(w, h, &pad)?;
        println!(
            "{w}x{h} -> padded {}x{} -> scale {:.4} x {:.4} to {}x{}",
            p.padded_w, p.padded_h, p.scale_x, p.scale_y, pad.target_w, pad.target_h
        );
    }

    println!();
    let clip = ClipEntry {
        id: "srf-2020-03-01-0042".into(),
        frame_count: 150,
        width: 1280,
        height: 720,
    };
    let plan = plan_clip(&clip, &pad, &spec)?;
    println!("{}", serde_json::to_string_pretty(&plan).expect("plans serialize"));
    Ok(())
}
