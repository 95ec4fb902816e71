//! Command-line surface: analyze a set, generate/enumerate maximally even
//! sets, classify, scan for type III, run distance-sum searches, verify the
//! theorem suites, and emit text/JSON/CSV/SVG.
//!
//! Output is deterministic: identical invocations produce byte-identical
//! output. Results go to stdout, diagnostics to stderr; exit codes are 0 on
//! success, 2 for usage/parse errors, 3 for an exceeded enumeration budget,
//! and 1 otherwise.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::checks::{run_all, CheckConfig};
use crate::classify::{classify, classify_set, find_generator, lemma_witness, type_iii_search, METype};
use crate::enumerate::for_each_subset;
use crate::error::Error;
use crate::maxeven::{
    enumeration_size, me_class_count, me_formula, me_oracle_with_budget, MEQuery, Rational,
    DEFAULT_ENUMERATION_BUDGET,
};
use crate::pcs::PitchClassSet;
use crate::properties::{
    angular_interval_sum, cardinality_variety, distance_sum_argmax, euclidean_chord_sum,
    second_order_me, step_pattern, DistanceMetric,
};
use crate::spectral::{IntervalVector, Spectrum};
use crate::svg::{polygon_svg, SvgOptions};

#[derive(Parser, Debug)]
#[command(
    name = "evenscale",
    version,
    about = "Fourier analysis of pitch-class sets in Z_c: maximally even sets, classification, and scale-theory checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Svg,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Full report on one set: spectrum, interval content, steps,
    /// evenness, classification.
    Analyze {
        /// Set literal, e.g. 12:7:{0,2,4,5,7,9,11}
        set: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Fold inversion into the canonical form.
        #[arg(long)]
        include_inversion: bool,
    },
    /// Maximally even set from the closed-form generator.
    Generate {
        #[arg(long)]
        c: u32,
        #[arg(long)]
        d: u32,
        /// Rational offset for the generator, as p or p/q.
        #[arg(long, default_value = "0")]
        alpha: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Fold inversion into the canonical form.
        #[arg(long)]
        include_inversion: bool,
    },
    /// Brute-force argmax of |F(d)| over all d-subsets.
    Oracle {
        #[arg(long)]
        c: u32,
        #[arg(long)]
        d: u32,
        /// Cap on the number of subsets enumerated.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Type I/IIa/IIb/III classification of the (c, d) class.
    Classify {
        #[arg(long)]
        c: u32,
        #[arg(long)]
        d: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Orbit census of spans of consecutive scale members.
    Variety {
        #[arg(long)]
        c: u32,
        #[arg(long)]
        d: u32,
        /// Window length; all spans 1..=d when omitted.
        #[arg(long)]
        span: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Scan moduli for type III classes and witness parameters.
    #[command(name = "scan-type3")]
    ScanType3 {
        /// Largest modulus scanned.
        #[arg(long, default_value_t = 24)]
        max: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Exhaustive distance-sum maximization over d-subsets.
    Distsum {
        #[arg(long)]
        c: u32,
        #[arg(long)]
        d: u32,
        #[arg(long, value_enum, default_value = "angular")]
        metric: MetricArg,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        budget: u64,
        /// csv emits the full per-subset sweep instead of the argmax report.
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run every theorem-verification suite; nonzero exit on violation.
    Verify {
        /// Upper bound for the type III existence scan.
        #[arg(long, default_value_t = 200)]
        max: u32,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        budget: u64,
    },
    /// Index the (c, d) maximally even set along the (d, e) one.
    #[command(name = "second-order")]
    SecondOrder {
        #[arg(long)]
        c: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        e: u32,
        /// Index offset; all offsets 0..d when omitted.
        #[arg(long)]
        offset: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MetricArg {
    Angular,
    Euclidean,
}

impl From<MetricArg> for DistanceMetric {
    fn from(value: MetricArg) -> Self {
        match value {
            MetricArg::Angular => DistanceMetric::Angular,
            MetricArg::Euclidean => DistanceMetric::Euclidean,
        }
    }
}

/// Failure carrying the process exit code.
#[derive(Debug)]
pub struct CliError {
    pub message: String,
    pub exit_code: i32,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            exit_code: 2,
        }
    }
}

impl From<Error> for CliError {
    fn from(error: Error) -> Self {
        let exit_code = match &error {
            Error::EnumerationTooLarge { .. } => 3,
            Error::Parse(_) | Error::ZeroDenominator => 2,
            _ => 1,
        };
        Self {
            message: error.to_string(),
            exit_code,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(error: std::io::Error) -> Self {
        // A closed stdout (e.g. piping into `head`) is not a failure.
        let exit_code = if error.kind() == std::io::ErrorKind::BrokenPipe {
            0
        } else {
            1
        };
        Self {
            message: error.to_string(),
            exit_code,
        }
    }
}

type CliResult = Result<(), CliError>;

/// Executes a parsed command, writing its output to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult {
    match &cli.command {
        Command::Analyze {
            set,
            format,
            include_inversion,
        } => analyze(set, *format, *include_inversion, out),
        Command::Generate {
            c,
            d,
            alpha,
            format,
            include_inversion,
        } => generate(*c, *d, alpha, *format, *include_inversion, out),
        Command::Oracle { c, d, budget, format } => oracle(*c, *d, *budget, *format, out),
        Command::Classify { c, d, format } => classify_cmd(*c, *d, *format, out),
        Command::Variety { c, d, span, format } => variety(*c, *d, *span, *format, out),
        Command::ScanType3 { max, format } => scan_type3(*max, *format, out),
        Command::Distsum {
            c,
            d,
            metric,
            budget,
            format,
        } => distsum(*c, *d, (*metric).into(), *budget, *format, out),
        Command::Verify { max, budget } => verify(*max, *budget, out),
        Command::SecondOrder {
            c,
            d,
            e,
            offset,
            format,
        } => second_order(*c, *d, *e, *offset, *format, out),
    }
}

fn json_out(out: &mut dyn Write, value: &impl Serialize) -> CliResult {
    serde_json::to_writer_pretty(&mut *out, value)
        .map_err(|e| CliError::from(std::io::Error::other(e)))?;
    writeln!(out)?;
    Ok(())
}

fn csv_quote(field: &str) -> String {
    format!("\"{field}\"")
}

fn members_json(set: &PitchClassSet) -> Vec<u32> {
    set.members().to_vec()
}

#[derive(Serialize)]
struct SpectrumPointJson {
    t: u32,
    re: f64,
    im: f64,
    abs: f64,
}

fn spectrum_json(spectrum: &Spectrum) -> Vec<SpectrumPointJson> {
    (0..spectrum.modulus())
        .map(|t| {
            let v = spectrum.value(t);
            SpectrumPointJson {
                t,
                re: v.re,
                im: v.im,
                abs: v.norm(),
            }
        })
        .collect()
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ClassificationJson {
    c: u32,
    d: u32,
    #[serde(rename = "type")]
    me_type: String,
    m: u32,
    c_prime: u32,
    d_prime: u32,
    generator: Option<u32>,
    period: u32,
    reduced: Option<Vec<u32>>,
}

impl ClassificationJson {
    fn of(classification: &crate::classify::MEClassification) -> Self {
        Self {
            c: classification.modulus,
            d: classification.cardinality,
            me_type: classification.me_type.to_string(),
            m: classification.m,
            c_prime: classification.c_prime,
            d_prime: classification.d_prime,
            generator: classification.generator,
            period: classification.period,
            reduced: classification.reduced.as_ref().map(members_json),
        }
    }
}

fn analyze(literal: &str, format: Format, include_inversion: bool, out: &mut dyn Write) -> CliResult {
    let set: PitchClassSet = literal.parse().map_err(CliError::from)?;
    let class = set.canonical_class(include_inversion);
    let spectrum = Spectrum::of_set(&set);
    let ic = IntervalVector::of_set(&set);
    let steps = step_pattern(&set).ok();
    let period = set.period().ok();
    let classification = classify_set(&set).ok();
    let generator = find_generator(&set);
    let angular = angular_interval_sum(&set);
    let euclidean = euclidean_chord_sum(&set);

    match format {
        Format::Svg => {
            let options = SvgOptions {
                title: Some(set.to_string()),
                ..SvgOptions::default()
            };
            write!(out, "{}", polygon_svg(&set, &options))?;
            Ok(())
        }
        Format::Json => {
            #[derive(Serialize)]
            #[serde(rename_all = "camelCase")]
            struct AnalyzeJson {
                set: String,
                c: u32,
                d: u32,
                members: Vec<u32>,
                canonical: Vec<u32>,
                orbit_size: u32,
                period: Option<u32>,
                steps: Option<Vec<u32>>,
                interval_content: Vec<u64>,
                spectrum: Vec<SpectrumPointJson>,
                maximally_even: Option<bool>,
                classification: Option<ClassificationJson>,
                generator: Option<u32>,
                angular_sum: u64,
                euclidean_sum: f64,
            }
            let value = AnalyzeJson {
                set: set.to_string(),
                c: set.modulus(),
                d: set.cardinality(),
                members: members_json(&set),
                canonical: members_json(class.canonical()),
                orbit_size: class.orbit_size(),
                period,
                steps: steps.map(|s| s.steps().to_vec()),
                interval_content: ic.counts().to_vec(),
                spectrum: spectrum_json(&spectrum),
                maximally_even: crate::maxeven::is_maximally_even(&set).ok(),
                classification: classification.as_ref().map(ClassificationJson::of),
                generator,
                angular_sum: angular,
                euclidean_sum: euclidean,
            };
            json_out(out, &value)
        }
        Format::Text => {
            writeln!(out, "set               {set}")?;
            writeln!(out, "canonical         {}", class.canonical())?;
            writeln!(out, "orbit size        {}", class.orbit_size())?;
            match period {
                Some(p) => writeln!(out, "period            {p}")?,
                None => writeln!(out, "period            -")?,
            }
            match &steps {
                Some(s) => writeln!(out, "steps             {s}")?,
                None => writeln!(out, "steps             -")?,
            }
            let ic_text: Vec<String> = ic.counts().iter().map(u64::to_string).collect();
            writeln!(out, "interval content  [{}]", ic_text.join(","))?;
            match crate::maxeven::is_maximally_even(&set) {
                Ok(true) => writeln!(out, "maximally even    yes")?,
                Ok(false) => writeln!(out, "maximally even    no")?,
                Err(_) => writeln!(out, "maximally even    - (degenerate cardinality)")?,
            }
            match &classification {
                Some(cl) if cl.me_type == METype::DegenerateTrivial => {
                    writeln!(out, "classification    degenerate (empty or full set)")?;
                }
                Some(cl) => {
                    let generator_text = cl
                        .generator
                        .map_or("-".to_string(), |f| f.to_string());
                    let reduced_text = cl
                        .reduced
                        .as_ref()
                        .map_or("-".to_string(), |r| r.to_string());
                    writeln!(
                        out,
                        "classification    type {}  (m={}, c'={}, d'={}, period {}, generator {}, reduced {})",
                        cl.me_type, cl.m, cl.c_prime, cl.d_prime, cl.period, generator_text, reduced_text
                    )?;
                }
                None => writeln!(out, "classification    not maximally even")?,
            }
            match generator {
                Some(f) => writeln!(out, "generated by      {f}")?,
                None => writeln!(out, "generated by      - (not a generated scale)")?,
            }
            writeln!(out, "angular sum       {angular}")?;
            writeln!(out, "euclidean sum     {euclidean:.6}")?;
            writeln!(out)?;
            writeln!(out, "   t          re          im         |F|")?;
            for t in 0..set.modulus() {
                let v = spectrum.value(t);
                writeln!(
                    out,
                    "{t:>4}  {:>10.6}  {:>10.6}  {:>10.6}",
                    v.re,
                    v.im,
                    v.norm()
                )?;
            }
            Ok(())
        }
        Format::Csv => Err(CliError::usage("analyze does not support --format csv")),
    }
}

fn generate(
    c: u32,
    d: u32,
    alpha: &str,
    format: Format,
    include_inversion: bool,
    out: &mut dyn Write,
) -> CliResult {
    let alpha: Rational = alpha.parse().map_err(CliError::from)?;
    let set = me_formula(&MEQuery::new(c, d).with_alpha(alpha))?;
    let class = set.canonical_class(include_inversion);
    let class_size = if d < c { me_class_count(c, d)? } else { 1 };
    match format {
        Format::Text => {
            writeln!(out, "formula       {set}")?;
            writeln!(out, "canonical     {}", class.canonical())?;
            writeln!(out, "class size    {class_size}")?;
            Ok(())
        }
        Format::Json => {
            #[derive(Serialize)]
            #[serde(rename_all = "camelCase")]
            struct GenerateJson {
                c: u32,
                d: u32,
                alpha: String,
                formula: Vec<u32>,
                canonical: Vec<u32>,
                class_size: u32,
            }
            json_out(
                out,
                &GenerateJson {
                    c,
                    d,
                    alpha: alpha.to_string(),
                    formula: members_json(&set),
                    canonical: members_json(class.canonical()),
                    class_size,
                },
            )
        }
        Format::Svg => {
            let canonical = class.canonical();
            let options = SvgOptions {
                title: Some(canonical.to_string()),
                ..SvgOptions::default()
            };
            write!(out, "{}", polygon_svg(canonical, &options))?;
            Ok(())
        }
        Format::Csv => Err(CliError::usage("generate does not support --format csv")),
    }
}

fn oracle(c: u32, d: u32, budget: u64, format: Format, out: &mut dyn Write) -> CliResult {
    let result = me_oracle_with_budget(c, d, budget)?;
    match format {
        Format::Text => {
            writeln!(out, "c              {c}")?;
            writeln!(out, "d              {d}")?;
            writeln!(out, "max |F(d)|     {:.6}", result.max_magnitude)?;
            writeln!(out, "maximizers     {}", result.maximizers.len())?;
            writeln!(out, "classes        {}", result.class_count())?;
            for rep in &result.class_representatives {
                writeln!(out, "class          {rep}")?;
            }
            for set in &result.maximizers {
                writeln!(out, "maximizer      {set}")?;
            }
            Ok(())
        }
        Format::Json => {
            #[derive(Serialize)]
            #[serde(rename_all = "camelCase")]
            struct OracleJson {
                c: u32,
                d: u32,
                max_magnitude: f64,
                maximizers: Vec<Vec<u32>>,
                class_representatives: Vec<Vec<u32>>,
            }
            json_out(
                out,
                &OracleJson {
                    c,
                    d,
                    max_magnitude: result.max_magnitude,
                    maximizers: result.maximizers.iter().map(members_json).collect(),
                    class_representatives: result
                        .class_representatives
                        .iter()
                        .map(members_json)
                        .collect(),
                },
            )
        }
        Format::Csv => {
            writeln!(out, "set")?;
            for set in &result.maximizers {
                writeln!(out, "{}", csv_quote(&set.to_string()))?;
            }
            Ok(())
        }
        Format::Svg => Err(CliError::usage("oracle does not support --format svg")),
    }
}

fn classify_cmd(c: u32, d: u32, format: Format, out: &mut dyn Write) -> CliResult {
    let classification = classify(c, d)?;
    match format {
        Format::Text => {
            writeln!(out, "c          {c}")?;
            writeln!(out, "d          {d}")?;
            writeln!(out, "type       {}", classification.me_type)?;
            writeln!(out, "m          {}", classification.m)?;
            writeln!(out, "c'         {}", classification.c_prime)?;
            writeln!(out, "d'         {}", classification.d_prime)?;
            writeln!(out, "period     {}", classification.period)?;
            match classification.generator {
                Some(f) => writeln!(out, "generator  {f}")?,
                None => writeln!(out, "generator  -")?,
            }
            match &classification.reduced {
                Some(r) => writeln!(out, "reduced    {r}")?,
                None => writeln!(out, "reduced    -")?,
            }
            Ok(())
        }
        Format::Json => json_out(out, &ClassificationJson::of(&classification)),
        Format::Csv => {
            writeln!(out, "c,d,type,m,cPrime,dPrime,generator,period,reduced")?;
            writeln!(
                out,
                "{c},{d},{},{},{},{},{},{},{}",
                classification.me_type,
                classification.m,
                classification.c_prime,
                classification.d_prime,
                classification
                    .generator
                    .map_or(String::new(), |f| f.to_string()),
                classification.period,
                classification
                    .reduced
                    .as_ref()
                    .map_or(String::new(), |r| csv_quote(&r.to_string())),
            )?;
            Ok(())
        }
        Format::Svg => Err(CliError::usage("classify does not support --format svg")),
    }
}

fn variety(c: u32, d: u32, span: Option<u32>, format: Format, out: &mut dyn Write) -> CliResult {
    let spans: Vec<u32> = match span {
        Some(k) => vec![k],
        None => (1..=d).collect(),
    };
    let reports = spans
        .iter()
        .map(|&k| cardinality_variety(c, d, k))
        .collect::<Result<Vec<_>, _>>()?;
    match format {
        Format::Text => {
            writeln!(out, "span  orbits  representatives")?;
            for report in &reports {
                let reps: Vec<String> = report
                    .representatives
                    .iter()
                    .map(|r| r.brace_notation())
                    .collect();
                writeln!(
                    out,
                    "{:>4}  {:>6}  {}",
                    report.span,
                    report.orbit_count,
                    reps.join(" ")
                )?;
            }
            Ok(())
        }
        Format::Csv => {
            writeln!(out, "spanK,orbitCount,representatives")?;
            for report in &reports {
                let reps: Vec<String> = report
                    .representatives
                    .iter()
                    .map(|r| r.brace_notation())
                    .collect();
                writeln!(
                    out,
                    "{},{},{}",
                    report.span,
                    report.orbit_count,
                    csv_quote(&reps.join(" "))
                )?;
            }
            Ok(())
        }
        Format::Json => {
            #[derive(Serialize)]
            #[serde(rename_all = "camelCase")]
            struct VarietyJson {
                c: u32,
                d: u32,
                span_k: u32,
                orbit_count: u32,
                representatives: Vec<Vec<u32>>,
            }
            let value: Vec<VarietyJson> = reports
                .iter()
                .map(|report| VarietyJson {
                    c,
                    d,
                    span_k: report.span,
                    orbit_count: report.orbit_count,
                    representatives: report.representatives.iter().map(members_json).collect(),
                })
                .collect();
            json_out(out, &value)
        }
        Format::Svg => Err(CliError::usage("variety does not support --format svg")),
    }
}

fn scan_type3(max: u32, format: Format, out: &mut dyn Write) -> CliResult {
    struct Row {
        c: u32,
        smallest: Option<u32>,
        lemma: Option<(u32, u32)>,
    }
    let rows: Vec<Row> = (2..=max)
        .map(|c| {
            let smallest = type_iii_search(c).expect("c >= 2");
            let lemma = lemma_witness(c).ok().map(|w| (w.k, w.p));
            Row { c, smallest, lemma }
        })
        .collect();
    match format {
        Format::Csv => {
            writeln!(out, "c,type3_d,lemma_k,lemma_p")?;
            for row in &rows {
                let d = row.smallest.map_or(String::new(), |d| d.to_string());
                let (k, p) = row
                    .lemma
                    .map_or((String::new(), String::new()), |(k, p)| {
                        (k.to_string(), p.to_string())
                    });
                writeln!(out, "{},{d},{k},{p}", row.c)?;
            }
            Ok(())
        }
        Format::Text => {
            writeln!(out, "   c  type3_d  lemma_k  lemma_p")?;
            for row in &rows {
                let d = row.smallest.map_or("-".to_string(), |d| d.to_string());
                let (k, p) = row
                    .lemma
                    .map_or(("-".to_string(), "-".to_string()), |(k, p)| {
                        (k.to_string(), p.to_string())
                    });
                writeln!(out, "{:>4}  {d:>7}  {k:>7}  {p:>7}", row.c)?;
            }
            Ok(())
        }
        Format::Json => {
            #[derive(Serialize)]
            #[serde(rename_all = "camelCase")]
            struct ScanJson {
                c: u32,
                smallest_type_iii: Option<u32>,
                lemma_k: Option<u32>,
                lemma_p: Option<u32>,
            }
            let value: Vec<ScanJson> = rows
                .iter()
                .map(|row| ScanJson {
                    c: row.c,
                    smallest_type_iii: row.smallest,
                    lemma_k: row.lemma.map(|(k, _)| k),
                    lemma_p: row.lemma.map(|(_, p)| p),
                })
                .collect();
            json_out(out, &value)
        }
        Format::Svg => Err(CliError::usage("scan-type3 does not support --format svg")),
    }
}

fn distsum(
    c: u32,
    d: u32,
    metric: DistanceMetric,
    budget: u64,
    format: Format,
    out: &mut dyn Write,
) -> CliResult {
    if format == Format::Csv {
        // Full sweep: one row per subset with both sums.
        enumeration_size(c, d, budget)?;
        writeln!(out, "set,angularSum,euclideanSum")?;
        let mut error = None;
        for_each_subset(c, d, |members| {
            if error.is_some() {
                return;
            }
            let set = PitchClassSet::from_sorted(c, members.to_vec());
            let line = format!(
                "{},{},{:.6}",
                csv_quote(&set.to_string()),
                angular_interval_sum(&set),
                euclidean_chord_sum(&set)
            );
            if let Err(e) = writeln!(out, "{line}") {
                error = Some(e);
            }
        });
        return match error {
            Some(e) => Err(e.into()),
            None => Ok(()),
        };
    }
    let report = distance_sum_argmax(c, d, metric, budget)?;
    match format {
        Format::Text => {
            writeln!(out, "c              {c}")?;
            writeln!(out, "d              {d}")?;
            writeln!(out, "metric         {metric}")?;
            writeln!(out, "max value      {:.6}", report.max_value)?;
            writeln!(out, "maximizers     {}", report.maximizers.len())?;
            writeln!(out, "classes        {}", report.class_count())?;
            for rep in &report.class_representatives {
                writeln!(out, "class          {rep}")?;
            }
            Ok(())
        }
        Format::Json => {
            #[derive(Serialize)]
            #[serde(rename_all = "camelCase")]
            struct DistsumJson {
                c: u32,
                d: u32,
                metric: String,
                max_value: f64,
                maximizer_count: usize,
                class_representatives: Vec<Vec<u32>>,
            }
            json_out(
                out,
                &DistsumJson {
                    c,
                    d,
                    metric: metric.to_string(),
                    max_value: report.max_value,
                    maximizer_count: report.maximizers.len(),
                    class_representatives: report
                        .class_representatives
                        .iter()
                        .map(members_json)
                        .collect(),
                },
            )
        }
        Format::Svg => Err(CliError::usage("distsum does not support --format svg")),
        Format::Csv => unreachable!("handled above"),
    }
}

fn verify(max: u32, budget: u64, out: &mut dyn Write) -> CliResult {
    let config = CheckConfig {
        existence_max: max,
        budget,
    };
    let reports = run_all(&config)?;
    let mut failed = false;
    for report in &reports {
        if report.passed() {
            writeln!(out, "ok   {} ({} cases)", report.name, report.cases)?;
        } else {
            failed = true;
            writeln!(
                out,
                "FAIL {} ({} cases, {} violations)",
                report.name,
                report.cases,
                report.violations.len()
            )?;
            for violation in report.violations.iter().take(5) {
                writeln!(out, "     {violation}")?;
            }
        }
    }
    if failed {
        return Err(CliError {
            message: "verification failed".into(),
            exit_code: 1,
        });
    }
    let total: u64 = reports.iter().map(|r| r.cases).sum();
    writeln!(out, "all {} suites passed ({total} cases)", reports.len())?;
    Ok(())
}

fn second_order(
    c: u32,
    d: u32,
    e: u32,
    offset: Option<u32>,
    format: Format,
    out: &mut dyn Write,
) -> CliResult {
    let offsets: Vec<u32> = match offset {
        Some(o) => vec![o],
        None => (0..d).collect(),
    };
    let results = offsets
        .iter()
        .map(|&o| second_order_me(c, d, e, o).map(|set| (o, set)))
        .collect::<Result<Vec<_>, _>>()?;
    match format {
        Format::Text => {
            writeln!(out, "offset  set                     canonical")?;
            for (o, set) in &results {
                let canonical = set.canonical_class(false);
                writeln!(out, "{o:>6}  {:<22}  {}", set.to_string(), canonical.canonical())?;
            }
            Ok(())
        }
        Format::Json => {
            #[derive(Serialize)]
            #[serde(rename_all = "camelCase")]
            struct SecondOrderJson {
                c: u32,
                d: u32,
                e: u32,
                offset: u32,
                members: Vec<u32>,
                canonical: Vec<u32>,
            }
            let value: Vec<SecondOrderJson> = results
                .iter()
                .map(|(o, set)| SecondOrderJson {
                    c,
                    d,
                    e,
                    offset: *o,
                    members: members_json(set),
                    canonical: members_json(set.canonical_class(false).canonical()),
                })
                .collect();
            json_out(out, &value)
        }
        Format::Csv => {
            writeln!(out, "offset,set,canonical")?;
            for (o, set) in &results {
                writeln!(
                    out,
                    "{o},{},{}",
                    csv_quote(&set.to_string()),
                    csv_quote(&set.canonical_class(false).canonical().to_string())
                )?;
            }
            Ok(())
        }
        Format::Svg => Err(CliError::usage("second-order does not support --format svg")),
    }
}
