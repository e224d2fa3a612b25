use pgeo::script::{run_source, Value};
use pgeo::svg::{conic_samples, render_svg, ChartOptions, Viewport};

fn numbers(d: &str) -> Vec<(f64, f64)> {
    let v: Vec<f64> = d.split(|c: char| c == 'M' || c == 'L' || c == 'Z' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().unwrap())
        .collect();
    v.chunks(2).map(|c| (c[0], c[1])).collect()
}

#[test]
fn unit_circle_is_drawn_within_a_pixel() {
    let (r, env) = run_source("conic k = conic5((1, 0), (-1, 0), (0, 1), (0, -1), (3/5, 4/5))");
    assert!(r.errors.is_empty());
    let Some(Value::Conic(k)) = env.get("k") else { panic!() };
    let samples = conic_samples(k, 128);
    assert_eq!(samples.len(), 128);
    for s in &samples {
        // exact points of x² + y² = z²
        assert!((&s[0] * &s[0] + &s[1] * &s[1] - &s[2] * &s[2]).is_zero());
    }

    let opts = ChartOptions { viewport: Viewport::new(-2.0, -2.0, 2.0, 2.0), ..ChartOptions::default() };
    let svg = render_svg(&env, &opts);
    let d = svg.split("d=\"").nth(1).unwrap().split('"').next().unwrap();
    assert!(d.ends_with('Z'));
    let pts = numbers(d);
    assert_eq!(pts.len(), 128);
    let (cx, cy, radius) = (256.0, 256.0, 128.0);
    let off = |(x, y): (f64, f64)| ((x - cx).hypot(y - cy) - radius).abs();
    for i in 0..pts.len() {
        let (a, b) = (pts[i], pts[(i + 1) % pts.len()]);
        assert!(off(a) <= 1.0, "vertex {a:?}");
        let mid = ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0);
        assert!(off(mid) <= 1.0, "chord midpoint {mid:?}");
    }
}

#[test]
fn parabola_is_open() {
    let (_, env) = run_source("conic k = conic5((0, 0), (1, 1), (-1, 1), (2, 4), (-2, 4))");
    let svg = render_svg(&env, &ChartOptions { viewport: Viewport::new(-3.0, -1.0, 3.0, 9.0), ..ChartOptions::default() });
    assert!(svg.contains("class=\"conic\""));
    assert!(!svg.contains('Z'));
}
