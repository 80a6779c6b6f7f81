"""
Database models for persisted classification reports
"""
from sqlalchemy import Boolean, Column, ForeignKey, Integer, String, Text, create_engine
from sqlalchemy.orm import declarative_base, relationship, sessionmaker
import os

# Create base class for declarative models
Base = declarative_base()

class StoredReport(Base):
    """One classification report: a dimension under a filter set and f2 mode"""
    __tablename__ = 'classification_reports'

    id = Column(Integer, primary_key=True, autoincrement=True)
    dimension = Column(Integer, nullable=False, index=True)
    mode = Column(String, nullable=False)
    f2_mode = Column(String, nullable=False)
    engine_version = Column(String, nullable=False)
    raw_count = Column(Integer, nullable=True)  # None on the K1 fast path
    payload = Column(Text, nullable=False)

    # Relationships
    survivors = relationship("StoredSurvivor", back_populates="report", cascade="all, delete-orphan")

    def to_dict(self):
        """Convert model to dictionary"""
        return {
            'id': self.id,
            'dimension': self.dimension,
            'mode': self.mode,
            'f2_mode': self.f2_mode,
            'engine_version': self.engine_version,
            'raw_count': self.raw_count,
            'survivors': [s.type_string for s in self.survivors]
        }

class StoredSurvivor(Base):
    """A surviving type of a stored report"""
    __tablename__ = 'survivor_types'

    id = Column(Integer, primary_key=True, autoincrement=True)
    report_id = Column(Integer, ForeignKey('classification_reports.id'), nullable=False)
    type_string = Column(String, nullable=False)
    pointed = Column(Boolean, nullable=False, default=False)

    # Relationships
    report = relationship("StoredReport", back_populates="survivors")

    def to_dict(self):
        """Convert model to dictionary"""
        return {
            'id': self.id,
            'report_id': self.report_id,
            'type': self.type_string,
            'pointed': bool(self.pointed)
        }

def get_database_connection(database_url=None):
    """
    Get database connection from environment variables

    Returns:
        tuple: (engine, Session)
    """
    # Fall back to a local SQLite file when DATABASE_URL is not set
    database_url = database_url or os.environ.get('DATABASE_URL', 'sqlite:///mnsd_reports.db')

    engine = create_engine(database_url)
    Session = sessionmaker(bind=engine)

    return engine, Session

def initialize_database(database_url=None):
    """Create all tables if they don't exist"""
    engine, Session = get_database_connection(database_url)
    Base.metadata.create_all(engine)
    return engine, Session
