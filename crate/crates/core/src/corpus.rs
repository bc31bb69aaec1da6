//! Documents paired with reference summaries, loaded from
//! `<root>/docs/<id>.txt` and `<root>/refs/<id>.txt`.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::error::{Error, Result};

/// Filename stem of a document, unique within its corpus.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct DocumentId(String);

impl DocumentId {
    pub fn new(id: impl Into<String>) -> Result<Self> {
        let id = id.into();
        if id.is_empty() || id.contains(['/', '\\']) {
            return Err(Error::InvalidDocumentId(id));
        }
        Ok(Self(id))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for DocumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub id: DocumentId,
    pub text: String,
}

impl Document {
    pub fn new(id: DocumentId, text: impl Into<String>) -> Result<Self> {
        let text = text.into();
        if text.trim().is_empty() {
            return Err(Error::EmptyDocumentText(id.0));
        }
        Ok(Self { id, text })
    }
}

/// Immutable after construction; documents are kept sorted by id.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Corpus {
    documents: Vec<Document>,
    references: BTreeMap<DocumentId, String>,
    dangling: Vec<DocumentId>,
}

impl Corpus {
    /// Sorts documents by id and rejects duplicates. References without a
    /// matching document are kept aside as dangling.
    pub fn new(
        mut documents: Vec<Document>,
        references: BTreeMap<DocumentId, String>,
    ) -> Result<Self> {
        documents.sort_by(|a, b| a.id.cmp(&b.id));
        if let Some(w) = documents.windows(2).find(|w| w[0].id == w[1].id) {
            return Err(Error::InvalidDocumentId(format!(
                "duplicate id {}",
                w[0].id
            )));
        }
        let (references, dangling): (BTreeMap<_, _>, BTreeMap<_, _>) = references
            .into_iter()
            .partition(|(id, _)| documents.binary_search_by(|d| d.id.cmp(id)).is_ok());
        Ok(Self {
            documents,
            references,
            dangling: dangling.into_keys().collect(),
        })
    }

    pub fn documents(&self) -> &[Document] {
        &self.documents
    }

    pub fn references(&self) -> &BTreeMap<DocumentId, String> {
        &self.references
    }

    pub fn reference(&self, id: &DocumentId) -> Option<&str> {
        self.references.get(id).map(String::as_str)
    }

    /// Reference files that matched no document.
    pub fn dangling_references(&self) -> &[DocumentId] {
        &self.dangling
    }

    pub fn len(&self) -> usize {
        self.documents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.documents.is_empty()
    }
}

/// Reads a corpus directory. Line endings are normalized to `\n`.
pub fn load_corpus(root: impl AsRef<Path>) -> Result<Corpus> {
    let root = root.as_ref();
    let docs_dir = root.join("docs");
    if !docs_dir.is_dir() {
        return Err(Error::MissingDocsDir(root.to_path_buf()));
    }
    let documents = read_txt_dir(&docs_dir)?
        .into_iter()
        .map(|(id, text)| Document::new(id, text))
        .collect::<Result<Vec<_>>>()?;
    if documents.is_empty() {
        return Err(Error::EmptyCorpus(root.to_path_buf()));
    }

    let refs_dir = root.join("refs");
    let references = if refs_dir.is_dir() {
        read_txt_dir(&refs_dir)?.into_iter().collect()
    } else {
        BTreeMap::new()
    };
    let corpus = Corpus::new(documents, references)?;
    for id in corpus.dangling_references() {
        log::warn!("reference {id} has no matching document");
    }
    Ok(corpus)
}

fn read_txt_dir(dir: &Path) -> Result<Vec<(DocumentId, String)>> {
    let entries = fs::read_dir(dir).map_err(|e| Error::io(dir, e))?;
    let mut paths: Vec<PathBuf> = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| Error::io(dir, e))?.path();
        if path.is_file() && path.extension().is_some_and(|ext| ext == "txt") {
            paths.push(path);
        }
    }
    paths.sort();
    paths
        .into_iter()
        .map(|path| {
            let stem = path
                .file_stem()
                .and_then(|s| s.to_str())
                .ok_or_else(|| Error::Encoding(path.clone()))?;
            let id = DocumentId::new(stem)?;
            let bytes = fs::read(&path).map_err(|e| Error::io(&path, e))?;
            let text = String::from_utf8(bytes).map_err(|_| Error::Encoding(path.clone()))?;
            Ok((id, normalize_newlines(&text)))
        })
        .collect()
}

fn normalize_newlines(text: &str) -> String {
    text.replace("\r\n", "\n").replace('\r', "\n")
}

/// Returns the corpus unchanged if every document has a reference.
pub fn require_paired(corpus: Corpus) -> Result<Corpus> {
    let missing: Vec<String> = corpus
        .documents
        .iter()
        .filter(|d| !corpus.references.contains_key(&d.id))
        .map(|d| d.id.0.clone())
        .collect();
    if missing.is_empty() {
        Ok(corpus)
    } else {
        Err(Error::UnpairedDocuments(missing))
    }
}
