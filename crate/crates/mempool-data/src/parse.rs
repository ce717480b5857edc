use std::io::{Read, Write};

use flate2::read::GzDecoder;

use crate::error::DataError;
use crate::types::MempoolSnapshot;

const GZIP_MAGIC: [u8; 2] = [0x1f, 0x8b];

/// Parses wide-format snapshot CSV, transparently decompressing gzip.
///
/// The expected layout is a header `timestamp,b<lb1>,b<lb2>,...` with
/// strictly ascending bucket lower bounds, followed by rows in strictly
/// increasing timestamp order. Malformed cells are reported with their
/// line number; structural violations (descending buckets, duplicate
/// or backward timestamps) are schema errors.
///
/// # Examples
///
/// ```
/// use mempool_data::parse_snapshots;
///
/// let csv = "timestamp,b1,b2\n100,3.0,1.2\n";
/// let snaps = parse_snapshots(csv.as_bytes()).unwrap();
/// assert_eq!(snaps.len(), 1);
/// assert_eq!(snaps[0].buckets, vec![1.0, 2.0]);
/// assert_eq!(snaps[0].weights, vec![3.0, 1.2]);
/// ```
pub fn parse_snapshots<R: Read>(mut reader: R) -> Result<Vec<MempoolSnapshot>, DataError> {
    let mut raw = Vec::new();
    reader.read_to_end(&mut raw)?;
    let plain: Box<dyn Read> = if raw.starts_with(&GZIP_MAGIC) {
        Box::new(GzDecoder::new(raw.as_slice()))
    } else {
        Box::new(raw.as_slice())
    };
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(plain);

    let headers = rdr
        .headers()
        .map_err(|e| DataError::Schema(format!("unreadable header: {e}")))?
        .clone();
    let buckets = parse_header(&headers)?;

    let mut out: Vec<MempoolSnapshot> = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(|e| match e.position() {
            Some(pos) => DataError::Parse {
                line: pos.line(),
                message: e.to_string(),
            },
            None => DataError::Schema(e.to_string()),
        })?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        let cell = |msg: String| DataError::Parse { line, message: msg };

        if record.len() != buckets.len() + 1 {
            return Err(cell(format!(
                "expected {} fields, found {}",
                buckets.len() + 1,
                record.len()
            )));
        }
        let timestamp: f64 = record[0]
            .parse()
            .map_err(|e| cell(format!("bad timestamp {:?}: {e}", &record[0])))?;
        let mut weights = Vec::with_capacity(buckets.len());
        for field in record.iter().skip(1) {
            let w: f64 = field
                .parse()
                .map_err(|e| cell(format!("bad weight {field:?}: {e}")))?;
            if !w.is_finite() || w < 0.0 {
                return Err(cell(format!("weight {w} must be finite and >= 0")));
            }
            weights.push(w);
        }
        if let Some(prev) = out.last() {
            if timestamp <= prev.timestamp {
                return Err(DataError::Schema(format!(
                    "timestamps must be strictly increasing; line {line} repeats or precedes {}",
                    prev.timestamp
                )));
            }
        }
        out.push(MempoolSnapshot::new(timestamp, buckets.clone(), weights)?);
    }
    Ok(out)
}

fn parse_header(headers: &csv::StringRecord) -> Result<Vec<f64>, DataError> {
    let mut fields = headers.iter();
    match fields.next() {
        Some("timestamp") => {}
        other => {
            return Err(DataError::Schema(format!(
                "first column must be 'timestamp', found {other:?}"
            )))
        }
    }
    let mut buckets = Vec::new();
    for field in fields {
        let bound = field
            .strip_prefix('b')
            .and_then(|s| s.parse::<f64>().ok())
            .filter(|b| b.is_finite() && *b >= 0.0)
            .ok_or_else(|| {
                DataError::Schema(format!("bucket column {field:?} is not of the form b<bound>"))
            })?;
        buckets.push(bound);
    }
    if buckets.is_empty() {
        return Err(DataError::Schema("no bucket columns".into()));
    }
    if buckets.windows(2).any(|w| w[0] >= w[1]) {
        return Err(DataError::Schema(
            "bucket columns must have strictly ascending lower bounds".into(),
        ));
    }
    Ok(buckets)
}

/// Writes snapshots in the wide CSV layout read by [`parse_snapshots`].
///
/// All snapshots must share one bucket ladder.
pub fn write_snapshots_csv<W: Write>(
    writer: W,
    snapshots: &[MempoolSnapshot],
) -> Result<(), DataError> {
    let mut w = csv::Writer::from_writer(writer);
    let Some(first) = snapshots.first() else {
        return Err(DataError::Param("nothing to write".into()));
    };
    let mut header = vec!["timestamp".to_string()];
    header.extend(first.buckets.iter().map(|b| format!("b{b}")));
    w.write_record(&header)
        .map_err(|e| DataError::Schema(e.to_string()))?;
    for snap in snapshots {
        if snap.buckets != first.buckets {
            return Err(DataError::Schema(
                "snapshots disagree on the bucket ladder".into(),
            ));
        }
        let mut row = vec![snap.timestamp.to_string()];
        row.extend(snap.weights.iter().map(|v| v.to_string()));
        w.write_record(&row)
            .map_err(|e| DataError::Schema(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}
