from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="kirbycert",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    include_package_data=True,
    install_requires=[
        "click>=8.0.0",
        "rich>=10.0.0",
        "networkx>=2.6",
        "jsonschema>=4.18.0",
        "referencing>=0.28.0",
    ],
    extras_require={
        "dev": [
            "pytest>=6.0.0",
            "sympy>=1.12",
            "black>=21.5b2",
            "flake8>=3.9.0",
            "mypy>=0.812",
            "isort>=5.8.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "kirbycert=kirbycert.cli.main:cli",
        ],
    },
    python_requires=">=3.8",
    description="Exact surgery calculus and machine-checkable certificates for links with surgeries yielding the 3-sphere",
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Environment :: Console",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    package_data={
        "kirbycert": ["data/schemas/*.json"],
    },
)
