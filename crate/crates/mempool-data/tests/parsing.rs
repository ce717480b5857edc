use std::io::Write;

use cl_analytics::ClParams;
use flate2::write::GzEncoder;
use flate2::Compression;
use mempool_data::{
    parse_snapshots, synth_trace, write_snapshots_csv, DataError, MempoolSnapshot, UnitScale,
};
use stochastic_sim::Seed;

#[test]
fn parses_wide_format() {
    let csv = "timestamp,b1,b2\n100,3.0,1.2\n160,2.5,0.8\n";
    let snaps = parse_snapshots(csv.as_bytes()).unwrap();
    assert_eq!(snaps.len(), 2);
    assert_eq!(snaps[0].buckets, vec![1.0, 2.0]);
    assert_eq!(snaps[0].weights, vec![3.0, 1.2]);
    assert_eq!(snaps[1].timestamp, 160.0);
}

#[test]
fn malformed_cell_reports_its_line() {
    let csv = "timestamp,b1,b2\n100,3.0,1.2\n160,oops,0.8\n";
    match parse_snapshots(csv.as_bytes()).unwrap_err() {
        DataError::Parse { line, .. } => assert_eq!(line, 3),
        other => panic!("expected parse error, got {other}"),
    }
}

#[test]
fn short_row_reports_its_line() {
    let csv = "timestamp,b1,b2\n100,3.0\n";
    assert!(matches!(
        parse_snapshots(csv.as_bytes()),
        Err(DataError::Parse { .. }) | Err(DataError::Schema(_))
    ));
}

#[test]
fn descending_buckets_are_a_schema_error() {
    let csv = "timestamp,b2,b1\n100,3.0,1.2\n";
    assert!(matches!(
        parse_snapshots(csv.as_bytes()),
        Err(DataError::Schema(_))
    ));
}

#[test]
fn duplicate_timestamp_is_a_schema_error() {
    let csv = "timestamp,b1\n100,3.0\n100,2.0\n";
    assert!(matches!(
        parse_snapshots(csv.as_bytes()),
        Err(DataError::Schema(_))
    ));
}

#[test]
fn backward_timestamp_is_a_schema_error() {
    let csv = "timestamp,b1\n100,3.0\n90,2.0\n";
    assert!(matches!(
        parse_snapshots(csv.as_bytes()),
        Err(DataError::Schema(_))
    ));
}

#[test]
fn negative_weight_is_rejected() {
    let csv = "timestamp,b1\n100,-3.0\n";
    assert!(matches!(
        parse_snapshots(csv.as_bytes()),
        Err(DataError::Parse { .. })
    ));
}

#[test]
fn gzip_input_is_transparently_decoded() {
    let csv = "timestamp,b1,b2\n100,3.0,1.2\n160,2.5,0.8\n";
    let mut enc = GzEncoder::new(Vec::new(), Compression::default());
    enc.write_all(csv.as_bytes()).unwrap();
    let gz = enc.finish().unwrap();
    let from_gz = parse_snapshots(gz.as_slice()).unwrap();
    let from_plain = parse_snapshots(csv.as_bytes()).unwrap();
    assert_eq!(from_gz, from_plain);
}

#[test]
fn writer_round_trips() {
    let snaps = vec![
        MempoolSnapshot::new(100.0, vec![1.0, 2.0], vec![3.0, 1.2]).unwrap(),
        MempoolSnapshot::new(160.0, vec![1.0, 2.0], vec![2.5, 0.8]).unwrap(),
    ];
    let mut buf = Vec::new();
    write_snapshots_csv(&mut buf, &snaps).unwrap();
    assert_eq!(parse_snapshots(buf.as_slice()).unwrap(), snaps);
}

#[test]
fn two_day_synthetic_file_normalizes_to_minute_spacing() {
    let scale = UnitScale::default();
    let spacing = scale.minutes_to_blocks(1.0);
    let horizon = scale.minutes_to_blocks(2.0 * 24.0 * 60.0);
    let params = ClParams::new(1.0, 0.6).unwrap();
    let snaps = synth_trace(&params, spacing, horizon, Seed::new(61, 0), &scale).unwrap();
    assert_eq!(snaps.len(), 2881);

    let mut buf = Vec::new();
    write_snapshots_csv(&mut buf, &snaps).unwrap();
    let parsed = parse_snapshots(buf.as_slice()).unwrap();
    assert_eq!(parsed.len(), 2881);
    let dt_seconds = parsed[1].timestamp - parsed[0].timestamp;
    assert!((dt_seconds - 60.0).abs() < 1e-9);
    let dt_blocks = scale.seconds_to_blocks(dt_seconds);
    assert!((dt_blocks - 0.099).abs() < 2e-3, "spacing {dt_blocks}");
}
